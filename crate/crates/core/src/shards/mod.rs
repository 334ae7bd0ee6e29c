//! Coxeter arrangements of types A and B in exact arithmetic: regions, the
//! poset of regions, rank-two subarrangements, shards and the shard digraph.

pub mod check;
pub mod linalg;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::weak::{CoxeterElement, Family, Permutation, SignedPermutation};
use linalg::{dot, null_space, q, rank, solve_in, Q};

pub const MAX_RANK_A: usize = 4;
pub const MAX_RANK_B: usize = 3;

/// A reflecting hyperplane, with normal oriented toward the base region.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub normal: Vec<Q>,
}

impl Hyperplane {
    fn from_ints(v: &[i64]) -> Self {
        Hyperplane { normal: v.iter().map(|&x| q(x)).collect() }
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        dot(&self.normal, x)
    }
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    pub family: Family,
    pub n: usize,
    pub hyperplanes: Vec<Hyperplane>,
    pub base_point: Vec<Q>,
}

/// A region: its separating set from the base region and an interior point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub separating: BTreeSet<usize>,
    pub witness: Vec<Q>,
}

impl Region {
    /// `true` on the base side of hyperplane `h`.
    pub fn sign(&self, h: usize) -> bool {
        !self.separating.contains(&h)
    }
}

/// The rank-two subarrangement through `H1 ∩ H2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTwo {
    pub members: Vec<usize>,
    pub basic: [usize; 2],
}

/// A shard: a cone in its carrier cut out by the hyperplanes cutting the
/// carrier. `sides[h]` is `true` when the shard lies on the base side of `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShardCone {
    pub carrier: usize,
    pub sides: BTreeMap<usize, bool>,
}

impl Arrangement {
    /// Hyperplanes `x_j - x_i` (type A) or `x_i`, `x_j - x_i`, `x_j + x_i`
    /// (type B), `i < j`; the base region contains `(1, 2, …, n)`.
    pub fn coxeter(family: Family, n: usize) -> Result<Self> {
        let limit = match family {
            Family::A => MAX_RANK_A,
            Family::B => MAX_RANK_B,
        };
        if n == 0 || n > limit {
            return Err(Error::ScopeExceeded(format!("arrangement of type {family:?} limited to ranks 1..={limit}")));
        }
        let unit = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>();
        let mut hyperplanes = Vec::new();
        if family == Family::B {
            for i in 0..n {
                hyperplanes.push(Hyperplane::from_ints(&unit(i)));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let v: Vec<i64> = unit(j).iter().zip(unit(i)).map(|(a, b)| a - b).collect();
                hyperplanes.push(Hyperplane::from_ints(&v));
            }
        }
        if family == Family::B {
            for i in 0..n {
                for j in i + 1..n {
                    let v: Vec<i64> = unit(j).iter().zip(unit(i)).map(|(a, b)| a + b).collect();
                    hyperplanes.push(Hyperplane::from_ints(&v));
                }
            }
        }
        let base_point = (1..=n as i64).map(q).collect();
        Ok(Arrangement { family, n, hyperplanes, base_point })
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Index of the hyperplane with the given normal up to sign.
    pub fn find(&self, normal: &[Q]) -> Option<usize> {
        let neg: Vec<Q> = normal.iter().map(|x| -x).collect();
        self.hyperplanes.iter().position(|h| h.normal == normal || h.normal == neg)
    }

    fn sign_constraints(&self, signs: &[(usize, bool)], strict: bool) -> Vec<(Vec<Q>, bool)> {
        signs
            .iter()
            .map(|&(h, s)| {
                let n = &self.hyperplanes[h].normal;
                (if s { n.clone() } else { n.iter().map(|x| -x).collect() }, strict)
            })
            .collect()
    }

    /// A point of `∩ equal` strictly on the given sides, if any.
    pub fn point_in(&self, equal: &[usize], signs: &[(usize, bool)]) -> Option<Vec<Q>> {
        let eqs: Vec<Vec<Q>> = equal.iter().map(|&h| self.hyperplanes[h].normal.clone()).collect();
        let basis = null_space(&eqs, self.n);
        solve_in(&basis, self.n, &self.sign_constraints(signs, true))
    }

    /// Is `{x in ∩ equal : weak sides}` of full dimension in `∩ equal`?
    pub fn full_dimensional(&self, equal: &[usize], weak: &[(usize, bool)]) -> bool {
        let eqs: Vec<Vec<Q>> = equal.iter().map(|&h| self.hyperplanes[h].normal.clone()).collect();
        let basis = null_space(&eqs, self.n);
        let cons: Vec<(Vec<Q>, bool)> = self
            .sign_constraints(weak, true)
            .into_iter()
            .filter(|(a, _)| basis.iter().any(|b| !dot(a, b).is_zero()))
            .collect();
        solve_in(&basis, self.n, &cons).is_some()
    }

    /// All regions, by wall crossing from the base region.
    pub fn regions(&self) -> Vec<Region> {
        let base = Region { separating: BTreeSet::new(), witness: self.base_point.clone() };
        let mut seen: HashMap<BTreeSet<usize>, usize> = HashMap::from([(BTreeSet::new(), 0)]);
        let mut out = vec![base];
        let mut queue = VecDeque::from([0]);
        while let Some(r) = queue.pop_front() {
            for h in 0..self.len() {
                let mut sep = out[r].separating.clone();
                if !sep.remove(&h) {
                    sep.insert(h);
                }
                if seen.contains_key(&sep) {
                    continue;
                }
                let signs: Vec<(usize, bool)> = (0..self.len()).map(|k| (k, !sep.contains(&k))).collect();
                if let Some(witness) = self.point_in(&[], &signs) {
                    seen.insert(sep.clone(), out.len());
                    queue.push_back(out.len());
                    out.push(Region { separating: sep, witness });
                }
            }
        }
        out.sort_by(|a, b| (a.separating.len(), &a.separating).cmp(&(b.separating.len(), &b.separating)));
        out
    }

    /// Region index of the point `x`, which must avoid every hyperplane.
    pub fn locate(&self, regions: &[Region], x: &[Q]) -> Option<usize> {
        let sep: BTreeSet<usize> = (0..self.len()).filter(|&h| self.hyperplanes[h].eval(x).is_negative()).collect();
        if (0..self.len()).any(|h| self.hyperplanes[h].eval(x).is_zero()) {
            return None;
        }
        regions.iter().position(|r| r.separating == sep)
    }

    pub fn rank_two(&self, h1: usize, h2: usize) -> RankTwo {
        assert_ne!(h1, h2);
        let (a, b) = (&self.hyperplanes[h1].normal, &self.hyperplanes[h2].normal);
        let members: Vec<usize> = (0..self.len())
            .filter(|&h| rank(&[a.clone(), b.clone(), self.hyperplanes[h].normal.clone()]) == 2)
            .collect();
        let basic: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&h| {
                let signs: Vec<(usize, bool)> = members.iter().map(|&k| (k, k != h)).collect();
                self.point_in(&[], &signs).is_some()
            })
            .collect();
        assert_eq!(basic.len(), 2, "a rank-two subarrangement has two basic hyperplanes");
        RankTwo { members, basic: [basic[0], basic[1]] }
    }

    /// Does `h1` cut `h2`?
    pub fn cuts(&self, h1: usize, h2: usize) -> bool {
        if h1 == h2 {
            return false;
        }
        let r = self.rank_two(h1, h2);
        r.basic.contains(&h1) && !r.basic.contains(&h2)
    }
}

/// An arrangement together with its regions, poset of regions and shards.
#[derive(Clone, Debug)]
pub struct ShardComplex {
    pub arrangement: Arrangement,
    pub regions: Vec<Region>,
    pub lattice: FiniteLattice,
    pub shards: Vec<ShardCone>,
    cut: Vec<Vec<bool>>,
}

impl ShardComplex {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let arrangement = Arrangement::coxeter(family, n)?;
        let regions = arrangement.regions();
        let mut rel = Vec::new();
        for (i, a) in regions.iter().enumerate() {
            for (j, b) in regions.iter().enumerate() {
                if i != j && a.separating.is_subset(&b.separating) {
                    rel.push((i, j));
                }
            }
        }
        let lattice = FiniteLattice::from_covers(regions.len(), &rel)?;
        let m = arrangement.len();
        let cut: Vec<Vec<bool>> = (0..m).map(|a| (0..m).map(|b| arrangement.cuts(a, b)).collect()).collect();
        let mut complex = ShardComplex { arrangement, regions, lattice, shards: Vec::new(), cut };
        complex.shards = (0..m).flat_map(|h| complex.shards_in(h)).collect();
        Ok(complex)
    }

    pub fn cuts(&self, h1: usize, h2: usize) -> bool {
        self.cut[h1][h2]
    }

    /// Hyperplanes cutting `h`.
    pub fn cutting(&self, h: usize) -> Vec<usize> {
        (0..self.arrangement.len()).filter(|&k| self.cut[k][h]).collect()
    }

    /// Realizable strict sign vectors on `others` within hyperplane `h`.
    fn cells(&self, h: usize, others: &[usize]) -> Vec<(BTreeMap<usize, bool>, Vec<Q>)> {
        let mut partial: Vec<Vec<(usize, bool)>> = vec![Vec::new()];
        for &k in others {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    [true, false].into_iter().map(move |s| {
                        let mut next = p.clone();
                        next.push((k, s));
                        next
                    })
                })
                .filter(|p| self.arrangement.point_in(&[h], p).is_some())
                .collect();
        }
        partial
            .into_iter()
            .map(|p| {
                let w = self.arrangement.point_in(&[h], &p).expect("feasible");
                (p.into_iter().collect(), w)
            })
            .collect()
    }

    fn shards_in(&self, h: usize) -> Vec<ShardCone> {
        self.cells(h, &self.cutting(h))
            .into_iter()
            .map(|(sides, _)| ShardCone { carrier: h, sides })
            .collect()
    }

    /// Maximal cells of the arrangement restricted to hyperplane `h`, as
    /// interior points.
    pub fn restricted_cells(&self, h: usize) -> Vec<Vec<Q>> {
        let others: Vec<usize> = (0..self.arrangement.len()).filter(|&k| k != h).collect();
        self.cells(h, &others).into_iter().map(|(_, w)| w).collect()
    }

    /// Does the closed shard contain the point?
    pub fn shard_contains(&self, s: &ShardCone, x: &[Q]) -> bool {
        let hp = &self.arrangement.hyperplanes;
        hp[s.carrier].eval(x).is_zero()
            && s.sides.iter().all(|(&k, &side)| {
                let v = hp[k].eval(x);
                if side {
                    !v.is_negative()
                } else {
                    !v.is_positive()
                }
            })
    }

    /// Facet of region `r` in hyperplane `h`, as the shard containing it.
    fn facet_shard(&self, r: usize, h: usize) -> Option<usize> {
        let reg = &self.regions[r];
        let signs: Vec<(usize, bool)> =
            (0..self.arrangement.len()).filter(|&k| k != h).map(|k| (k, reg.sign(k))).collect();
        self.arrangement.point_in(&[h], &signs)?;
        self.shards.iter().position(|s| s.carrier == h && s.sides.iter().all(|(&k, &side)| reg.sign(k) == side))
    }

    /// Lower shards of a region: shards containing its facets whose
    /// hyperplanes separate it from the base region.
    pub fn lower_shards(&self, r: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.regions[r].separating.iter().filter_map(|&h| self.facet_shard(r, h)).collect();
        out.sort_unstable();
        out
    }

    pub fn upper_regions(&self, s: usize) -> Vec<usize> {
        (0..self.regions.len()).filter(|&r| self.lower_shards(r).contains(&s)).collect()
    }

    /// The minimal upper region of a shard.
    pub fn min_upper_region(&self, s: usize) -> Result<usize> {
        let up = self.upper_regions(s);
        let min = up
            .iter()
            .copied()
            .find(|&r| up.iter().all(|&o| self.lattice.leq(r, o)))
            .ok_or_else(|| Error::Invalid(format!("shard {s} has no minimal upper region")))?;
        if !self.lattice.is_join_irreducible(min) {
            return Err(Error::Invalid(format!("minimal upper region of shard {s} is not join-irreducible")));
        }
        Ok(min)
    }

    /// Do the relative interiors of two shards meet?
    pub fn compatible(&self, a: usize, b: usize) -> bool {
        let (s1, s2) = (&self.shards[a], &self.shards[b]);
        if s1.carrier == s2.carrier {
            return false;
        }
        let signs: Vec<(usize, bool)> = s1.sides.iter().chain(&s2.sides).map(|(&k, &v)| (k, v)).collect();
        self.arrangement.point_in(&[s1.carrier, s2.carrier], &signs).is_some()
    }

    fn weak_sides(&self, shards: &[usize]) -> Vec<(usize, bool)> {
        shards.iter().flat_map(|&s| self.shards[s].sides.iter().map(|(&k, &v)| (k, v))).collect()
    }

    /// Shard arrow: the carrier of `a` cuts that of `b` and the shards meet in
    /// codimension two.
    pub fn arrow(&self, a: usize, b: usize) -> bool {
        let (h1, h2) = (self.shards[a].carrier, self.shards[b].carrier);
        self.cuts(h1, h2) && self.arrangement.full_dimensional(&[h1, h2], &self.weak_sides(&[a, b]))
    }

    /// Is `Σ_a ∩ Σ_c ⊆ Σ_b`, given that the carrier of `b` contains
    /// `H_a ∩ H_c`?
    fn intersection_within(&self, a: usize, c: usize, b: usize) -> bool {
        let hp = &self.arrangement.hyperplanes;
        let oriented = |k: usize, s: bool| -> Vec<Q> {
            if s {
                hp[k].normal.clone()
            } else {
                hp[k].normal.iter().map(|x| -x).collect()
            }
        };
        let eqs = [hp[self.shards[a].carrier].normal.clone(), hp[self.shards[c].carrier].normal.clone()];
        let basis = null_space(&eqs, self.arrangement.n);
        let inside: Vec<(Vec<Q>, bool)> =
            self.weak_sides(&[a, c]).into_iter().map(|(k, s)| (oriented(k, s), false)).collect();
        self.shards[b].sides.iter().all(|(&k, &v)| {
            let mut cons = inside.clone();
            cons.push((oriented(k, !v), true));
            solve_in(&basis, self.arrangement.n, &cons).is_none()
        })
    }

    /// Existence of a compatible shard `Σ'` such that the carrier of `b` is a
    /// non-basic member of the rank-two subarrangement through the carriers
    /// of `a` and `Σ'`, and `Σ_a ∩ Σ' ⊆ Σ_b`.
    pub fn arrow_by_intersection(&self, a: usize, b: usize) -> bool {
        let hb = self.shards[b].carrier;
        (0..self.shards.len()).any(|c| {
            if !self.compatible(a, c) {
                return false;
            }
            let r = self.arrangement.rank_two(self.shards[a].carrier, self.shards[c].carrier);
            r.members.contains(&hb) && !r.basic.contains(&hb) && self.intersection_within(a, c, b)
        })
    }

    /// All shard arrows.
    pub fn digraph(&self) -> Vec<(usize, usize)> {
        let k = self.shards.len();
        (0..k)
            .into_par_iter()
            .flat_map_iter(|a| (0..k).filter(move |&b| a != b).map(move |b| (a, b)))
            .filter(|&(a, b)| self.arrow(a, b))
            .collect()
    }
}

/// Image of the base point under a group element.
pub trait ActsOnArrangement: CoxeterElement {
    fn act(&self, x: &[Q]) -> Vec<Q>;
}

impl ActsOnArrangement for Permutation {
    fn act(&self, x: &[Q]) -> Vec<Q> {
        let mut y = vec![Q::zero(); x.len()];
        for (i, xi) in x.iter().enumerate() {
            y[self.at(i + 1) - 1] = *xi;
        }
        y
    }
}

impl ActsOnArrangement for SignedPermutation {
    fn act(&self, x: &[Q]) -> Vec<Q> {
        let mut y = vec![Q::zero(); x.len()];
        for (i, xi) in x.iter().enumerate() {
            let v = self.at(i as i32 + 1);
            y[v.unsigned_abs() as usize - 1] = if v > 0 { *xi } else { -xi };
        }
        y
    }
}

impl ShardComplex {
    /// Region index of `wB` for every element of a weak order.
    pub fn region_map<E: ActsOnArrangement>(&self, elements: &[E]) -> Result<Vec<usize>> {
        elements
            .iter()
            .map(|w| {
                self.arrangement
                    .locate(&self.regions, &w.act(&self.arrangement.base_point))
                    .ok_or_else(|| Error::Invalid("image of the base point is not in a region".into()))
            })
            .collect()
    }
}
