//! Subarcs, shard arrows, and congruences encoded by their contracted arcs.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arcs_a::{enumerate_arcs_a, relative_side, ArcA, Side};
use crate::arcs_b::{cliques, delta_b_orb_inv, enumerate_arcs_b, SymArcOrPair, TypeBArc};
use crate::error::{Error, Result};
use crate::lattice::{Congruence, FiniteLattice};
use crate::pointset::PointSet;
use crate::weak::{Permutation, SignedPermutation, WeakOrder};

/// An arc model in which forcing is the subarc order.
pub trait ArcModel: Copy + Ord + Hash + Debug + Send + Sync {
    fn all(n: usize) -> Vec<Self>;
    fn is_subarc_of(&self, other: &Self) -> bool;
}

impl ArcModel for ArcA {
    fn all(n: usize) -> Vec<Self> {
        enumerate_arcs_a(n)
    }

    fn is_subarc_of(&self, other: &Self) -> bool {
        ArcA::is_subarc_of(self, other)
    }
}

impl ArcModel for TypeBArc {
    fn all(n: usize) -> Vec<Self> {
        enumerate_arcs_b(n)
    }

    fn is_subarc_of(&self, other: &Self) -> bool {
        is_subarc_b(self, other)
    }
}

/// Is `sub` a subarc of `arc` (orbifold model)?
pub fn is_subarc_b(sub: &TypeBArc, arc: &TypeBArc) -> bool {
    use TypeBArc::*;
    match (*sub, *arc) {
        (Ordinary { bottom: p1, top: q1, right: r1 }, Ordinary { bottom: p, top: q, right: r }) => {
            p <= p1 && q1 <= q && r1 == r.intersection(PointSet::open(p1, q1))
        }
        (Ordinary { bottom: p1, top: q1, right: r1 }, Orbifold { top: q, right: r }) => {
            q1 <= q && r1 == r.intersection(PointSet::open(p1, q1))
        }
        (Orbifold { top: q1, right: r1 }, Orbifold { top: q, right: r }) => {
            q1 <= q && r1 == r.intersection(PointSet::open(0, q1))
        }
        (Orbifold { .. } | Long { .. }, Ordinary { .. }) | (Long { .. }, Orbifold { .. }) => false,
        (Ordinary { bottom: p1, top: q1, .. }, Long { left_ep: p, right_ep: q, left, right }) => {
            let span = PointSet::open(p1, q1);
            (q1 <= p && sub.left_set() == left.intersection(span))
                || (q1 <= q && sub.right_set() == right.intersection(span))
        }
        (Orbifold { top: p1, .. }, Long { left_ep: p, right_ep: q, left, right }) => {
            let span = PointSet::open(0, p1);
            p1 <= p.min(q) && sub.left_set() == left.intersection(span) && sub.right_set() == right.intersection(span)
        }
        (
            Long { left_ep: p1, right_ep: q1, left: l1, right: r1 },
            Long { left_ep: p, right_ep: q, left, right },
        ) => {
            p1 <= p
                && q1 <= q
                && l1 == left.intersection(PointSet::open(0, p1))
                && r1 == right.intersection(PointSet::open(0, q1))
        }
    }
}

/// Subarc relation of the symmetric model on `2n` points.
pub fn is_subarc_sym(n: usize, sub: &SymArcOrPair, sup: &SymArcOrPair) -> bool {
    let m = 2 * n;
    let right_of_antipode = |x: &ArcA| relative_side(x, &x.rotate(m)) == Some(Side::Right);
    match (*sub, *sup) {
        (SymArcOrPair::Symmetric(a1), SymArcOrPair::Symmetric(a)) => a1.is_subarc_of(&a),
        (SymArcOrPair::Pair(_), SymArcOrPair::Symmetric(a)) => {
            !sub.is_overlapping(n) && sub.arcs(n).iter().any(|x| x.is_subarc_of(&a))
        }
        (SymArcOrPair::Symmetric(a1), SymArcOrPair::Pair(a)) => a1.is_subarc_of(&a) && a1.is_subarc_of(&a.rotate(m)),
        (SymArcOrPair::Pair(_), SymArcOrPair::Pair(a)) => sub
            .arcs(n)
            .iter()
            .any(|x| x.is_subarc_of(&a) && (!sub.is_overlapping(n) || right_of_antipode(x))),
    }
}

/// Is `sub` a loose subarc of `arc`?
pub fn is_loose_subarc(sub: &TypeBArc, arc: &TypeBArc) -> bool {
    if is_subarc_b(sub, arc) {
        return true;
    }
    match (*sub, *arc) {
        (TypeBArc::Long { left_ep: p1, right_ep: q1, left: l1, right: r1 }, TypeBArc::Orbifold { top: q, .. }) => {
            p1 <= q
                && q1 <= q
                && l1 == arc.left_set().intersection(PointSet::open(0, p1))
                && r1 == arc.right_set().intersection(PointSet::open(0, q1))
        }
        (
            TypeBArc::Long { left_ep: p1, right_ep: q1, left: l1, right: r1 },
            TypeBArc::Long { left_ep: p, right_ep: q, left, right },
        ) => {
            p1 <= q
                && q1 <= p
                && l1 == PointSet::open(0, p1).difference(right)
                && r1 == PointSet::open(0, q1).difference(left)
                && sub.between_set().is_empty()
        }
        _ => false,
    }
}

/// Combinatorial shard arrow `a1 -> a2` of the orbifold model.
///
/// When neither arc is an orbifold arc the arcs share exactly one endpoint.
/// Two long arcs must share it in the same role. An ordinary arc `(a, b)`
/// below a long arc shares its upper endpoint `b` and is cut from the piece
/// of the long arc ending at `b`; moreover `a` may not lie left of the long
/// arc when `b` is its right endpoint, nor right of it when `b` is its left
/// endpoint.
pub fn arrow_b(a1: &TypeBArc, a2: &TypeBArc) -> bool {
    if a1 == a2 || !is_subarc_b(a1, a2) {
        return false;
    }
    use TypeBArc::*;
    match (*a1, *a2) {
        (Ordinary { bottom, top, .. }, Long { left_ep, right_ep, left, right }) => {
            if bottom == left_ep || bottom == right_ep {
                return (top == left_ep || top == right_ep) && a2.between_set().is_empty();
            }
            let span = PointSet::open(bottom, top);
            (top == right_ep && !left.contains(bottom) && a1.right_set() == right.intersection(span))
                || (top == left_ep && !right.contains(bottom) && a1.left_set() == left.intersection(span))
        }
        (Long { left_ep: p1, right_ep: q1, .. }, Long { left_ep: p, right_ep: q, .. }) => (p1 == p) != (q1 == q),
        (Ordinary { bottom: p1, top: q1, .. }, Ordinary { bottom: p, top: q, .. }) => (p1 == p) != (q1 == q),
        (Orbifold { top: q1, .. }, Orbifold { top: q2, .. }) => q1 != q2,
        (Ordinary { top: q1, .. }, Orbifold { top: q2, .. }) => q1 == q2,
        (Orbifold { top, .. }, Long { left_ep, right_ep, .. }) => {
            a2.between_set().is_empty() && top == left_ep.min(right_ep)
        }
        _ => false,
    }
}

/// The same arrow relation read from the symmetric model, where the
/// conditions are stated on arcs of `2n` points.
pub fn arrow_sym(n: usize, s1: &SymArcOrPair, s2: &SymArcOrPair) -> bool {
    if s1 == s2 || !is_subarc_sym(n, s1, s2) {
        return false;
    }
    let m = 2 * n;
    let anti = |p: usize| m + 1 - p;
    let label = |p: usize| crate::weak::position_to_label(n, p);
    let right_of_antipode = |x: &ArcA| relative_side(x, &x.rotate(m)) == Some(Side::Right);
    // the piece of `y` left over after removing `x`, as a valid subarc pair
    let piece_ok = |c: ArcA| match SymArcOrPair::from_arc(n, c) {
        Ok(SymArcOrPair::Pair(_)) => {
            !(c.bottom <= n && c.top > n) || right_of_antipode(&c)
        }
        _ => false,
    };
    let piece = |lo: usize, hi: usize, y: &ArcA| ArcA::new(lo, hi, y.right.intersection(PointSet::open(lo, hi))).ok();
    match (*s1, *s2) {
        (SymArcOrPair::Symmetric(x), SymArcOrPair::Symmetric(y)) => return x.top != y.top,
        (SymArcOrPair::Pair(_), SymArcOrPair::Symmetric(y)) => {
            return !s1.is_overlapping(n) && s1.arcs(n).iter().any(|x| x.top == y.top || x.bottom == y.top)
        }
        (SymArcOrPair::Pair(_), SymArcOrPair::Pair(rep)) => {
            let targets = if s2.is_overlapping(n) { vec![rep] } else { s2.arcs(n) };
            let found = s1.arcs(n).iter().any(|x| {
                (!s1.is_overlapping(n) || right_of_antipode(x))
                    && targets.iter().any(|y| {
                        x.is_subarc_of(y)
                            && ((x.top == y.top && x.bottom != anti(y.bottom) && x.bottom != y.bottom)
                                && piece(y.bottom, x.bottom, y).is_some_and(piece_ok)
                                || (x.bottom == y.bottom && x.top != anti(y.top) && x.top != y.top)
                                    && piece(x.top, y.top, y).is_some_and(piece_ok))
                    })
            });
            if found {
                return true;
            }
        }
        _ => {}
    }
    if !s2.is_overlapping(n) {
        return false;
    }
    // the arc of the pair whose negative endpoint is nearer the middle
    let Some(y) = s2.arcs(n).into_iter().find(|y| -label(y.bottom) < label(y.top)) else {
        return false;
    };
    let p = (-label(y.bottom)) as usize;
    let y2 = y.rotate(m);
    let no_between = (1..p as i32).flat_map(|i| [i, -i]).all(|i| {
        let k = crate::weak::label_to_position(n, i);
        y.left.contains(k) == y2.left.contains(k)
    });
    no_between
        && match *s1 {
            SymArcOrPair::Symmetric(x) => label(x.top) as usize == p,
            SymArcOrPair::Pair(x) => !s1.is_overlapping(n) && label(x.bottom) as usize == p && x.top == y.top,
        }
}

/// Shard arrow between arcs on a line: a proper subarc sharing exactly one
/// endpoint.
pub fn arrow_a(a1: &ArcA, a2: &ArcA) -> bool {
    a1 != a2 && a1.is_subarc_of(a2) && ((a1.bottom == a2.bottom) != (a1.top == a2.top))
}

/// Forcing of join-irreducibles, read on their arcs.
pub fn forcing_b(a1: &TypeBArc, a2: &TypeBArc) -> bool {
    is_subarc_b(a1, a2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArrowEdge {
    pub source: TypeBArc,
    pub target: TypeBArc,
}

/// Every arrow between arcs on `n` points.
pub fn arrows_b(n: usize) -> Vec<ArrowEdge> {
    let arcs = enumerate_arcs_b(n);
    arcs.par_iter()
        .flat_map_iter(|a| {
            arcs.iter()
                .filter(move |b| arrow_b(a, b))
                .map(move |b| ArrowEdge { source: *a, target: *b })
        })
        .collect()
}

/// Reflexive-transitive closure of the arrows, indexed like `enumerate_arcs_b(n)`.
pub fn arrow_closure(n: usize) -> Vec<FixedBitSet> {
    let arcs = enumerate_arcs_b(n);
    let index: std::collections::HashMap<TypeBArc, usize> = arcs.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let mut succ = vec![Vec::new(); arcs.len()];
    for e in arrows_b(n) {
        succ[index[&e.source]].push(index[&e.target]);
    }
    (0..arcs.len())
        .into_par_iter()
        .map(|s| {
            let mut seen = FixedBitSet::with_capacity(arcs.len());
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if !seen.put(y) {
                        stack.push(y);
                    }
                }
            }
            seen
        })
        .collect()
}

/// A congruence of the weak order, recorded as its set of contracted arcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "A: Serialize", deserialize = "A: Deserialize<'de> + Ord"))]
pub struct ArcCongruence<A> {
    pub n: usize,
    pub contracted: BTreeSet<A>,
}

impl<A: ArcModel> ArcCongruence<A> {
    pub fn identity(n: usize) -> Self {
        ArcCongruence { n, contracted: BTreeSet::new() }
    }

    pub fn full(n: usize) -> Self {
        ArcCongruence { n, contracted: A::all(n).into_iter().collect() }
    }

    /// Contracts every arc having a generator as a subarc.
    pub fn from_generators(n: usize, gens: &[A]) -> Self {
        let contracted = A::all(n).into_iter().filter(|b| gens.iter().any(|g| g.is_subarc_of(b))).collect();
        ArcCongruence { n, contracted }
    }

    /// The coarsest congruence not contracting `a`: everything except the
    /// subarcs of `a` is contracted.
    pub fn meet_irreducible(n: usize, a: &A) -> Self {
        let contracted = A::all(n).into_iter().filter(|b| !b.is_subarc_of(a)).collect();
        ArcCongruence { n, contracted }
    }

    pub fn from_predicate(n: usize, pred: impl Fn(&A) -> bool) -> Self {
        ArcCongruence { n, contracted: A::all(n).into_iter().filter(|a| pred(a)).collect() }
    }

    pub fn contracts(&self, a: &A) -> bool {
        self.contracted.contains(a)
    }

    pub fn uncontracted(&self) -> Vec<A> {
        A::all(self.n).into_iter().filter(|a| !self.contracted.contains(a)).collect()
    }

    /// Contracted sets of congruences are closed under passing to superarcs.
    pub fn is_valid(&self) -> bool {
        let all = A::all(self.n);
        self.contracted.iter().all(|a| all.contains(a))
            && self
                .contracted
                .iter()
                .all(|a| all.iter().all(|b| !a.is_subarc_of(b) || self.contracted.contains(b)))
    }

    pub fn meet(&self, other: &Self) -> Self {
        ArcCongruence { n: self.n, contracted: self.contracted.intersection(&other.contracted).copied().collect() }
    }

    pub fn join(&self, other: &Self) -> Self {
        ArcCongruence { n: self.n, contracted: self.contracted.union(&other.contracted).copied().collect() }
    }
}

impl ArcCongruence<TypeBArc> {
    /// Elements of the quotient: signed permutations whose diagrams use only
    /// uncontracted arcs.
    pub fn quotient_elements(&self) -> Vec<SignedPermutation> {
        let mut out: Vec<SignedPermutation> = cliques(self.n, &self.uncontracted())
            .iter()
            .map(|d| delta_b_orb_inv(d).expect("cliques are diagrams"))
            .collect();
        out.sort();
        out
    }

    /// Partition of the weak order into fibres of `x -> π↓(x)`, the largest
    /// quotient element below `x`.
    pub fn element_partition(&self, w: &WeakOrder<SignedPermutation>) -> Result<Congruence> {
        let q: Vec<usize> = self.quotient_elements().iter().map(|e| w.index_of(e)).collect();
        let l = w.lattice();
        let mut labels = Vec::with_capacity(w.len());
        for x in 0..w.len() {
            let below: Vec<usize> = q.iter().copied().filter(|&y| l.leq(y, x)).collect();
            let top = below
                .iter()
                .copied()
                .find(|&y| below.iter().all(|&z| l.leq(z, y)))
                .ok_or_else(|| Error::Invalid(format!("no largest quotient element below {}", w.element(x))))?;
            labels.push(top);
        }
        Ok(Congruence::from_labels(&labels))
    }

    /// The subposet of the weak order induced on quotient elements, checked
    /// to be a lattice isomorphic to the quotient by the element partition.
    pub fn quotient_lattice(&self, w: &WeakOrder<SignedPermutation>) -> Result<FiniteLattice> {
        let elems: Vec<usize> = self.quotient_elements().iter().map(|e| w.index_of(e)).collect();
        let induced = w.lattice().induced(&elems)?;
        let theta = self.element_partition(w)?;
        let q = w.lattice().quotient(&theta)?;
        if !q.lattice.is_isomorphic(&induced) {
            return Err(Error::Invalid("induced order differs from the quotient lattice".into()));
        }
        Ok(induced)
    }

    /// Is the set of uncontracted arcs closed under loose subarcs?
    pub fn is_in_con_a(&self) -> bool {
        let all = enumerate_arcs_b(self.n);
        let u = self.uncontracted();
        u.iter().all(|a| all.iter().all(|b| !is_loose_subarc(b, a) || !self.contracted.contains(b)))
    }

    /// A symmetric congruence of the symmetric group on `2n` points restricting
    /// to this one: the congruence generated by the unfolded contracted arcs.
    pub fn lift_to_symmetric(&self) -> Result<ArcCongruence<ArcA>> {
        if !self.is_in_con_a() {
            return Err(Error::NotInConA);
        }
        let gens: Vec<ArcA> = self.contracted.iter().flat_map(|a| a.unfolded_arcs(self.n)).collect();
        let lift = ArcCongruence::<ArcA>::from_generators(2 * self.n, &gens);
        if lift.contracted.iter().any(|a| !lift.contracted.contains(&a.rotate(2 * self.n))) {
            return Err(Error::Invalid("lift is not symmetric".into()));
        }
        if restrict_to_b(self.n, &lift) != *self {
            return Err(Error::Invalid("lift does not restrict to the congruence".into()));
        }
        Ok(lift)
    }
}

/// Partition of the signed permutations induced by the congruence of the
/// weak order on `2n` points generated by the unfolded contracted arcs.
pub fn restricted_lift_partition(
    theta: &ArcCongruence<TypeBArc>,
    wb: &WeakOrder<SignedPermutation>,
    wa: &WeakOrder<Permutation>,
) -> Congruence {
    let m = 2 * theta.n;
    let la = wa.lattice();
    let pairs: Vec<(usize, usize)> = theta
        .contracted
        .iter()
        .flat_map(|a| a.unfolded_arcs(theta.n))
        .map(|x| {
            let j = wa.index_of(&x.to_join_irreducible(m));
            (j, la.lower_covers(j)[0])
        })
        .collect();
    let big = la.congruence_generated(&pairs);
    let labels: Vec<usize> = wb.elements().iter().map(|e| big.class_label(wa.index_of(&e.unfold()))).collect();
    Congruence::from_labels(&labels)
}

/// Type-B arcs contracted by a congruence on `2n` points: those having an
/// unfolded arc contracted.
pub fn restrict_to_b(n: usize, theta: &ArcCongruence<ArcA>) -> ArcCongruence<TypeBArc> {
    ArcCongruence::from_predicate(n, |a: &TypeBArc| a.unfolded_arcs(n).iter().any(|x| theta.contracts(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak::CoxeterElement;

    fn pts(v: &[usize]) -> PointSet {
        v.iter().copied().collect()
    }

    fn orb(top: usize, right: &[usize]) -> TypeBArc {
        TypeBArc::orbifold(top, pts(right)).unwrap()
    }

    fn long(p: usize, q: usize, l: &[usize], r: &[usize]) -> TypeBArc {
        TypeBArc::long(p, q, pts(l), pts(r)).unwrap()
    }

    fn ord(p: usize, q: usize, r: &[usize]) -> TypeBArc {
        TypeBArc::ordinary(p, q, pts(r)).unwrap()
    }

    #[test]
    fn subarc_examples() {
        for a in enumerate_arcs_b(3) {
            assert!(is_subarc_b(&a, &a));
        }
        assert!(is_subarc_b(&orb(1, &[]), &orb(2, &[])));
        assert!(is_subarc_b(&orb(1, &[]), &orb(2, &[1])));
        assert!(!is_subarc_b(&long(1, 2, &[], &[]), &long(2, 1, &[], &[])));
        assert!(!is_subarc_b(&long(2, 1, &[], &[]), &long(1, 2, &[], &[])));
    }

    #[test]
    fn symmetric_model_agrees() {
        for n in 1..=4 {
            let arcs = enumerate_arcs_b(n);
            let unf: Vec<_> = arcs.iter().map(|a| a.unfold(n)).collect();
            for (i, a) in arcs.iter().enumerate() {
                for (j, b) in arcs.iter().enumerate() {
                    assert_eq!(is_subarc_sym(n, &unf[i], &unf[j]), is_subarc_b(a, b), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn subarc_relation_is_transitive() {
        let arcs = enumerate_arcs_b(3);
        for a in &arcs {
            for b in &arcs {
                if !is_subarc_b(a, b) {
                    continue;
                }
                if a != b {
                    assert!(!is_subarc_b(b, a));
                }
                for c in &arcs {
                    if is_subarc_b(b, c) {
                        assert!(is_subarc_b(a, c), "{a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn loose_subarcs() {
        let o = orb(2, &[1]);
        let l = long(1, 2, &[], &[]);
        assert!(!is_subarc_b(&l, &o));
        assert!(is_loose_subarc(&l, &TypeBArc::orbifold_with_left(2, pts(&[1])).unwrap()));
        for a in enumerate_arcs_b(3) {
            for b in enumerate_arcs_b(3) {
                if is_subarc_b(&a, &b) {
                    assert!(is_loose_subarc(&a, &b));
                }
                if b.is_long() && !b.between_set().is_empty() && b.is_long() && a.is_long() && !is_subarc_b(&b, &a) {
                    assert!(!is_loose_subarc(&b, &a));
                }
            }
        }
    }

    #[test]
    fn arrow_examples() {
        assert!(arrow_b(&orb(1, &[]), &TypeBArc::orbifold_with_left(2, pts(&[1])).unwrap()));
        assert!(arrow_b(&ord(1, 2, &[]), &orb(2, &[1])));
        for a in enumerate_arcs_b(3) {
            assert!(!arrow_b(&a, &a));
        }
    }

    #[test]
    fn arrows_agree_between_models() {
        for n in 1..=5 {
            let arcs = enumerate_arcs_b(n);
            for a in &arcs {
                for b in &arcs {
                    assert_eq!(arrow_b(a, b), arrow_sym(n, &a.unfold(n), &b.unfold(n)), "{a:?} -> {b:?}");
                }
            }
        }
    }

    #[test]
    fn generators() {
        let n = 3;
        assert!(ArcCongruence::<TypeBArc>::from_generators(n, &[]).contracted.is_empty());
        let s0 = TypeBArc::from_join_irreducible(&SignedPermutation::from_word(n, &[0]).unwrap()).unwrap();
        let theta = ArcCongruence::from_generators(n, &[s0]);
        assert!(theta.contracted.iter().all(|a| !a.is_ordinary()));
        assert_eq!(theta.contracted.len(), enumerate_arcs_b(n).iter().filter(|a| !a.is_ordinary()).count());
        assert!(theta.is_valid());
    }

    #[test]
    fn parabolic_quotient_size() {
        let n = 3;
        let w = WeakOrder::<SignedPermutation>::new(n).unwrap();
        let s0 = TypeBArc::from_join_irreducible(&SignedPermutation::from_word(n, &[0]).unwrap()).unwrap();
        let theta = ArcCongruence::from_generators(n, &[s0]);
        assert_eq!(theta.quotient_elements().len(), 6);
        let q = theta.quotient_lattice(&w).unwrap();
        let s3 = WeakOrder::<crate::weak::Permutation>::new(3).unwrap();
        assert!(q.is_isomorphic(s3.lattice()));
        let id = ArcCongruence::<TypeBArc>::identity(n);
        assert_eq!(id.quotient_elements().len(), 48);
    }

    #[test]
    fn meet_and_join() {
        let n = 2;
        let arcs = enumerate_arcs_b(n);
        let t = ArcCongruence::from_generators(n, &arcs[..1]);
        assert_eq!(t.meet(&ArcCongruence::identity(n)), ArcCongruence::identity(n));
        assert_eq!(t.join(&t), t);
    }

    #[test]
    fn meet_irreducible_keeps_subarcs() {
        let n = 3;
        for a in enumerate_arcs_b(n) {
            let t = ArcCongruence::meet_irreducible(n, &a);
            assert!(t.is_valid());
            assert!(!t.contracts(&a));
        }
    }

    #[test]
    fn partitions_are_congruences() {
        let n = 2;
        let w = WeakOrder::<SignedPermutation>::new(n).unwrap();
        for a in enumerate_arcs_b(n) {
            let t = ArcCongruence::from_generators(n, &[a]);
            let part = t.element_partition(&w).unwrap();
            assert!(w.lattice().is_congruence(&part));
            let contracted: BTreeSet<TypeBArc> = w
                .lattice()
                .contracted_jis(&part)
                .iter()
                .map(|j| TypeBArc::from_join_irreducible(w.element(j.j)).unwrap())
                .collect();
            assert_eq!(contracted, t.contracted);
        }
        assert!(SignedPermutation::identity(2).inversions().is_empty());
    }
}

#[cfg(test)]
mod oracle_tests {
    use super::*;

    #[test]
    fn subarc_is_forcing() {
        for n in 2..=4 {
            let w = WeakOrder::<SignedPermutation>::new(n).unwrap();
            let l = w.lattice();
            let jis = l.join_irreducibles();
            let arcs: Vec<TypeBArc> = jis.iter().map(|j| TypeBArc::from_join_irreducible(w.element(j.j)).unwrap()).collect();
            for (i, j1) in jis.iter().enumerate() {
                let theta = l.principal_congruence(*j1);
                let forced: BTreeSet<usize> = l.contracted_jis(&theta).iter().map(|j| j.j).collect();
                for (k, j2) in jis.iter().enumerate() {
                    let f = forced.contains(&j2.j);
                    let a = (is_subarc_b(&arcs[i], &arcs[k]), is_subarc_sym(n, &arcs[i].unfold(n), &arcs[k].unfold(n)));
                    assert_eq!(a, (f, f), "n={n} {:?} -> {:?}", arcs[i], arcs[k]);
                }
            }
        }
    }

    #[test]
    fn arrow_closure_is_subarc() {
        for n in 1..=4 {
            let arcs = enumerate_arcs_b(n);
            let closure = arrow_closure(n);
            for (i, a) in arcs.iter().enumerate() {
                for (k, b) in arcs.iter().enumerate() {
                    assert_eq!(closure[i].contains(k), is_subarc_b(a, b), "n={n} {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn meet_is_common_refinement() {
        let n = 3;
        let w = WeakOrder::<SignedPermutation>::new(n).unwrap();
        let arcs = enumerate_arcs_b(n);
        for pair in arcs.chunks(2).take(12) {
            let t1 = ArcCongruence::from_generators(n, &pair[..1]);
            let t2 = ArcCongruence::from_generators(n, &pair[pair.len() - 1..]);
            let p1 = t1.element_partition(&w).unwrap();
            let p2 = t2.element_partition(&w).unwrap();
            let labels: Vec<usize> = (0..w.len()).map(|x| p1.class_label(x) * w.len() + p2.class_label(x)).collect();
            assert_eq!(t1.meet(&t2).element_partition(&w).unwrap(), Congruence::from_labels(&labels));
        }
    }

    #[test]
    fn every_congruence_of_b2_is_encoded() {
        let n = 2;
        let w = WeakOrder::<SignedPermutation>::new(n).unwrap();
        let arcs = enumerate_arcs_b(n);
        let mut from_arcs = BTreeSet::new();
        for mask in 0u32..(1 << arcs.len()) {
            let t = ArcCongruence::from_predicate(n, |a| arcs.iter().position(|b| b == a).is_some_and(|i| mask >> i & 1 == 1));
            if !t.is_valid() {
                continue;
            }
            let part = t.element_partition(&w).unwrap();
            assert!(w.lattice().is_congruence(&part));
            from_arcs.insert(part.classes());
        }
        let all: BTreeSet<_> = w.lattice().all_congruences().iter().map(|c| c.classes()).collect();
        assert_eq!(from_arcs, all);
    }

    fn valid_congruences(n: usize) -> Vec<ArcCongruence<TypeBArc>> {
        let arcs = enumerate_arcs_b(n);
        let mut out = BTreeSet::new();
        for a in &arcs {
            for b in &arcs {
                out.insert(ArcCongruence::from_generators(n, &[*a, *b]).contracted);
            }
        }
        out.insert(BTreeSet::new());
        out.into_iter().map(|contracted| ArcCongruence { n, contracted }).collect()
    }

    #[test]
    fn con_a_matches_lattice_lift() {
        let n = 2;
        let wb = WeakOrder::<SignedPermutation>::new(n).unwrap();
        let wa = WeakOrder::<Permutation>::new(2 * n).unwrap();
        for t in valid_congruences(n) {
            let restricted = restricted_lift_partition(&t, &wb, &wa);
            let exact = restricted == t.element_partition(&wb).unwrap();
            assert_eq!(exact, t.is_in_con_a(), "{t:?}");
            match t.lift_to_symmetric() {
                Ok(lift) => assert_eq!(restrict_to_b(n, &lift), t),
                Err(e) => assert!(matches!(e, Error::NotInConA)),
            }
        }
    }

    #[test]
    fn con_a_closed_under_meet_and_join() {
        let n = 3;
        let inside: Vec<_> = valid_congruences(n).into_iter().filter(|t| t.is_in_con_a()).collect();
        assert!(inside.len() > 2);
        for a in inside.iter().take(40) {
            for b in &inside {
                assert!(a.meet(b).is_in_con_a());
                assert!(a.join(b).is_in_con_a());
            }
        }
    }

    #[test]
    fn serde_roundtrip() {
        let t = ArcCongruence::from_generators(2, &enumerate_arcs_b(2)[..1]);
        let js = serde_json::to_string(&t).unwrap();
        assert!(js.starts_with("{\"n\":2,\"contracted\":["));
        let back: ArcCongruence<TypeBArc> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
    }
}
