//! Randomised checks at ranks beyond the exhaustive suites.

use arclat::arcs_a::{delta_a, delta_a_inv, DiagramA};
use arclat::arcs_b::{delta_b_orb, delta_b_orb_direct, delta_b_orb_inv, enumerate_arcs_b, DiagramB};
use arclat::catalog::CongruenceB;
use arclat::weak::{Permutation, SignedPermutation};
use proptest::prelude::*;

fn permutation(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

fn signed_permutation(max: usize) -> impl Strategy<Value = SignedPermutation> {
    permutation(max).prop_flat_map(|p| {
        let n = p.len();
        (Just(p), prop::collection::vec(any::<bool>(), n)).prop_map(|(p, signs)| {
            let short = p.iter().zip(signs).map(|(&v, neg)| if neg { -(v as i32) } else { v as i32 }).collect();
            SignedPermutation::new(short).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn type_a_roundtrip_and_symmetry(p in permutation(10)) {
        let pi = Permutation::new(p).unwrap();
        let d = delta_a(&pi);
        prop_assert!(d.is_noncrossing());
        prop_assert_eq!(delta_a_inv(&d).unwrap(), pi.clone());
        prop_assert_eq!(delta_a(&pi.w0_conjugate()), d.rotate_half_turn());
        let back: DiagramA = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn type_b_roundtrip(pi in signed_permutation(9)) {
        let d = delta_b_orb(&pi);
        prop_assert!(d.is_noncrossing());
        prop_assert_eq!(&delta_b_orb_direct(&pi), &d);
        prop_assert_eq!(delta_b_orb_inv(&d).unwrap(), pi.clone());
        let back: DiagramB = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        prop_assert_eq!(back, d);
        let again: SignedPermutation = serde_json::from_str(&serde_json::to_string(&pi).unwrap()).unwrap();
        prop_assert_eq!(again, pi);
    }

    #[test]
    fn generated_congruences_are_closed(picks in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
                                        others in prop::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let arcs = enumerate_arcs_b(3);
        let gens = |ix: &[prop::sample::Index]| ix.iter().map(|i| *i.get(&arcs)).collect::<Vec<_>>();
        let a = CongruenceB::from_generators(3, &gens(&picks));
        let b = CongruenceB::from_generators(3, &gens(&others));
        prop_assert!(a.is_valid());
        prop_assert!(a.meet(&b).is_valid());
        prop_assert!(a.join(&b).is_valid());
        prop_assert!(gens(&picks).iter().all(|g| a.contracts(g)));
    }
}
