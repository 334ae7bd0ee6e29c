//! Cross-checks between the arrangement and the arc models.

use std::collections::HashMap;
use std::fmt::Debug;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::linalg::{dot, Q};
use super::{ActsOnArrangement, ShardComplex};
use crate::arcs_a::{compatible_a, ArcA};
use crate::arcs_b::{compatible_b, ShardEquality, TypeBArc};
use crate::error::Result;
use crate::forcing::{arrow_a, arrow_b};
use crate::lattice::FiniteLattice;
use crate::weak::{Permutation, SignedPermutation, WeakOrder};

/// A shard written as a carrier normal and weak inequalities `a · x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    pub carrier: Vec<Q>,
    pub inequalities: Vec<Vec<Q>>,
}

impl Polyhedron {
    pub fn contains(&self, x: &[Q]) -> bool {
        dot(&self.carrier, x).is_zero() && self.inequalities.iter().all(|a| !dot(a, x).is_negative())
    }
}

/// Group elements whose join-irreducibles carry arcs.
pub trait ArcGeometry: ActsOnArrangement {
    type Arc: Copy + Debug + Eq;
    fn arc_of(&self) -> Result<Self::Arc>;
    fn descriptor(n: usize, a: &Self::Arc) -> Polyhedron;
    fn arcs_compatible(n: usize, a: &Self::Arc, b: &Self::Arc) -> bool;
    fn arc_arrow(a: &Self::Arc, b: &Self::Arc) -> bool;
}

fn unit(n: usize, i: i32) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i.unsigned_abs() as usize - 1] = if i > 0 { Q::one() } else { -Q::one() };
    v
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl ArcGeometry for Permutation {
    type Arc = ArcA;

    fn arc_of(&self) -> Result<ArcA> {
        ArcA::from_join_irreducible(self)
    }

    fn descriptor(n: usize, a: &ArcA) -> Polyhedron {
        let d = a.shard_descriptor();
        let v = unit(n, d.p as i32);
        let mut inequalities: Vec<Vec<Q>> = d.lower.iter().map(|i| sub(&unit(n, i as i32), &v)).collect();
        inequalities.extend(d.upper.iter().map(|i| sub(&v, &unit(n, i as i32))));
        Polyhedron { carrier: sub(&unit(n, d.q as i32), &v), inequalities }
    }

    fn arcs_compatible(_n: usize, a: &ArcA, b: &ArcA) -> bool {
        compatible_a(a, b)
    }

    fn arc_arrow(a: &ArcA, b: &ArcA) -> bool {
        arrow_a(a, b)
    }
}

impl ArcGeometry for SignedPermutation {
    type Arc = TypeBArc;

    fn arc_of(&self) -> Result<TypeBArc> {
        TypeBArc::from_join_irreducible(self)
    }

    fn descriptor(n: usize, a: &TypeBArc) -> Polyhedron {
        let d = a.shard_descriptor();
        let (carrier, v) = match d.equality {
            ShardEquality::Zero(p) => (unit(n, p as i32), vec![Q::zero(); n]),
            ShardEquality::Equal(p, q) => (sub(&unit(n, q as i32), &unit(n, p as i32)), unit(n, p as i32)),
            ShardEquality::Opposite(p, q) => (add(&unit(n, q as i32), &unit(n, p as i32)), unit(n, q as i32)),
        };
        let mut inequalities: Vec<Vec<Q>> = d.lower.iter().map(|&i| sub(&unit(n, i), &v)).collect();
        inequalities.extend(d.upper.iter().map(|&i| sub(&v, &unit(n, i))));
        Polyhedron { carrier, inequalities }
    }

    fn arcs_compatible(n: usize, a: &TypeBArc, b: &TypeBArc) -> bool {
        compatible_b(n, a, b)
    }

    fn arc_arrow(a: &TypeBArc, b: &TypeBArc) -> bool {
        arrow_b(a, b)
    }
}

/// Outcome of the geometric cross-checks for one arrangement.
#[derive(Clone, Debug, Default, Serialize)]
pub struct GeometryReport {
    pub hyperplanes: usize,
    pub regions: usize,
    pub poset_is_weak_order: bool,
    pub semidistributive: bool,
    pub shards: usize,
    pub join_irreducibles: usize,
    pub shard_bijection: bool,
    pub lower_shards_are_cjr: bool,
    pub compatibility_matches: bool,
    pub descriptor_mismatches: Vec<String>,
    pub arrows: usize,
    pub arrows_match_intersection: bool,
    pub arrows_match_arcs: bool,
    pub closure_is_forcing: bool,
}

impl GeometryReport {
    pub fn all_pass(&self) -> bool {
        self.poset_is_weak_order
            && self.semidistributive
            && self.shards == self.join_irreducibles
            && self.shard_bijection
            && self.lower_shards_are_cjr
            && self.compatibility_matches
            && self.descriptor_mismatches.is_empty()
            && self.arrows_match_intersection
            && self.arrows_match_arcs
            && self.closure_is_forcing
    }
}

fn dual(l: &FiniteLattice) -> Result<FiniteLattice> {
    let rel: Vec<(usize, usize)> = l.covers().into_iter().map(|(a, b)| (b, a)).collect();
    FiniteLattice::from_covers(l.len(), &rel)
}

/// Runs every cross-check between the shard complex and the weak order `w`.
pub fn check<E: ArcGeometry>(cx: &ShardComplex, w: &WeakOrder<E>) -> Result<GeometryReport> {
    let n = cx.arrangement.n;
    let mut rep = GeometryReport {
        hyperplanes: cx.arrangement.len(),
        regions: cx.regions.len(),
        shards: cx.shards.len(),
        ..Default::default()
    };
    let map = cx.region_map(w.elements())?;
    let wl = w.lattice();
    let bijective = {
        let mut seen = vec![false; cx.regions.len()];
        map.iter().all(|&r| !std::mem::replace(&mut seen[r], true)) && map.len() == cx.regions.len()
    };
    rep.poset_is_weak_order = bijective
        && (0..w.len()).all(|x| (0..w.len()).all(|y| wl.leq(x, y) == cx.lattice.leq(map[x], map[y])))
        && cx.lattice.is_isomorphic(wl);
    let d = dual(&cx.lattice)?;
    rep.semidistributive = (0..cx.lattice.len())
        .all(|x| matches!(cx.lattice.cjr_oracle(x), Ok(Some(_))) && matches!(d.cjr_oracle(x), Ok(Some(_))));
    if !bijective {
        return Ok(rep);
    }
    let mut inv = vec![0; map.len()];
    for (x, &r) in map.iter().enumerate() {
        inv[r] = x;
    }
    let jis = cx.lattice.join_irreducibles();
    rep.join_irreducibles = jis.len();

    // shard -> join-irreducible region -> group element -> arc
    let j_of: Vec<usize> = (0..cx.shards.len()).map(|s| cx.min_upper_region(s)).collect::<Result<_>>()?;
    let mut hit = vec![false; cx.regions.len()];
    rep.shard_bijection = j_of.iter().all(|&j| !std::mem::replace(&mut hit[j], true))
        && jis.iter().all(|j| hit[j.j])
        && j_of.iter().enumerate().all(|(s, &j)| cx.lower_shards(j) == vec![s]);
    let shard_of_region: HashMap<usize, usize> = j_of.iter().enumerate().map(|(s, &j)| (j, s)).collect();
    let arcs: Vec<E::Arc> = j_of.iter().map(|&j| w.element(inv[j]).arc_of()).collect::<Result<_>>()?;

    rep.lower_shards_are_cjr = (0..w.len()).all(|x| {
        let mut from_shards: Vec<usize> = cx.lower_shards(map[x]).iter().map(|&s| inv[j_of[s]]).collect();
        let mut cjr: Vec<usize> = w.cjr_weak(w.element(x)).iter().map(|e| w.index_of(e)).collect();
        from_shards.sort_unstable();
        cjr.sort_unstable();
        from_shards == cjr
    });

    let k = cx.shards.len();
    rep.compatibility_matches = (0..k)
        .all(|a| (0..k).all(|b| a == b || cx.compatible(a, b) == E::arcs_compatible(n, &arcs[a], &arcs[b])));

    for (s, arc) in arcs.iter().enumerate() {
        let poly = E::descriptor(n, arc);
        let carrier = cx.arrangement.find(&poly.carrier);
        if carrier != Some(cx.shards[s].carrier) {
            rep.descriptor_mismatches.push(format!("{arc:?}: carrier"));
            continue;
        }
        let bad = cx
            .restricted_cells(cx.shards[s].carrier)
            .iter()
            .any(|x| cx.shard_contains(&cx.shards[s], x) != poly.contains(x));
        if bad {
            rep.descriptor_mismatches.push(format!("{arc:?}: inequalities"));
        }
    }

    let edges = cx.digraph();
    rep.arrows = edges.len();
    let mut adj = vec![vec![false; k]; k];
    for &(a, b) in &edges {
        adj[a][b] = true;
    }
    rep.arrows_match_intersection = (0..k).all(|a| (0..k).all(|b| a == b || adj[a][b] == cx.arrow_by_intersection(a, b)));
    rep.arrows_match_arcs = (0..k).all(|a| (0..k).all(|b| adj[a][b] == E::arc_arrow(&arcs[a], &arcs[b])));

    let ji_of: HashMap<usize, crate::lattice::JoinIrreducible> = jis.iter().map(|j| (j.j, *j)).collect();
    rep.closure_is_forcing = (0..k).all(|a| {
        let mut seen = vec![false; k];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            for y in 0..k {
                if adj[x][y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        let theta = cx.lattice.principal_congruence(ji_of[&j_of[a]]);
        (0..k).all(|b| {
            let jb = ji_of[&j_of[b]];
            seen[b] == theta.same_class(jb.j, jb.lower)
        })
    });
    debug_assert!(shard_of_region.len() == k);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak::Family;

    fn run<E: ArcGeometry>(family: Family, n: usize) -> GeometryReport {
        let cx = ShardComplex::new(family, n).unwrap();
        let w = WeakOrder::<E>::new(n).unwrap();
        check(&cx, &w).unwrap()
    }

    #[test]
    fn type_b_rank_two() {
        let r = run::<SignedPermutation>(Family::B, 2);
        assert_eq!((r.hyperplanes, r.regions, r.shards), (4, 8, 6));
        assert!(r.all_pass(), "{r:#?}");
    }

    #[test]
    fn type_a_rank_three() {
        let r = run::<Permutation>(Family::A, 3);
        assert_eq!((r.hyperplanes, r.regions), (3, 6));
        assert!(r.all_pass(), "{r:#?}");
    }

    #[test]
    fn type_b_rank_three() {
        let r = run::<SignedPermutation>(Family::B, 3);
        assert_eq!((r.hyperplanes, r.regions), (9, 48));
        assert!(r.all_pass(), "{r:#?}");
    }

    #[test]
    fn type_a_rank_four() {
        let r = run::<Permutation>(Family::A, 4);
        assert_eq!(r.regions, 24);
        assert!(r.all_pass(), "{r:#?}");
    }
}
