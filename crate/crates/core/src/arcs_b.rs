//! Type-B arcs.
//!
//! Two models are implemented. The symmetric model works with centrally
//! symmetric arc diagrams on the `2n` points `-n, …, -1, 1, …, n`; these are
//! ordinary type-A arcs on positions `1..=2n` (see
//! [`crate::weak::label_to_position`]). The orbifold model folds the picture
//! in half: ordinary arcs join two numbered points, orbifold arcs join a
//! numbered point to the orbifold point `×`, and long arcs wrap once around
//! `×`.
//!
//! A long arc has a left endpoint `p` and a right endpoint `q`. `L(α)` holds
//! the points below `p` lying left of the left piece and `R(α)` the points
//! below `q` lying right of the right piece.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::arcs_a::{compatible_a, delta_a, delta_a_inv, relative_side, ArcA, DiagramA, Side};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::weak::{label_to_position, position_to_label, SignedPermutation};

/// Largest rank for which all type-B diagrams are enumerated.
pub const MAX_DIAGRAM_RANK: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ArcBRepr", into = "ArcBRepr")]
pub enum TypeBArc {
    Ordinary { bottom: usize, top: usize, right: PointSet },
    Orbifold { top: usize, right: PointSet },
    Long { left_ep: usize, right_ep: usize, left: PointSet, right: PointSet },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ArcBRepr {
    Ordinary {
        bottom: usize,
        top: usize,
        right: PointSet,
    },
    Orbifold {
        top: usize,
        right: PointSet,
    },
    Long {
        left: usize,
        right_ep: usize,
        #[serde(rename = "L")]
        l: PointSet,
        #[serde(rename = "R")]
        r: PointSet,
    },
}

impl TryFrom<ArcBRepr> for TypeBArc {
    type Error = Error;
    fn try_from(r: ArcBRepr) -> Result<Self> {
        match r {
            ArcBRepr::Ordinary { bottom, top, right } => TypeBArc::ordinary(bottom, top, right),
            ArcBRepr::Orbifold { top, right } => TypeBArc::orbifold(top, right),
            ArcBRepr::Long { left, right_ep, l, r } => TypeBArc::long(left, right_ep, l, r),
        }
    }
}

impl From<TypeBArc> for ArcBRepr {
    fn from(a: TypeBArc) -> Self {
        match a {
            TypeBArc::Ordinary { bottom, top, right } => ArcBRepr::Ordinary { bottom, top, right },
            TypeBArc::Orbifold { top, right } => ArcBRepr::Orbifold { top, right },
            TypeBArc::Long { left_ep, right_ep, left, right } => {
                ArcBRepr::Long { left: left_ep, right_ep, l: left, r: right }
            }
        }
    }
}

/// Raw-data check for a long arc: the side sets must sit below the
/// endpoints, and the unfolded arc must be compatible with its antipode and
/// lie to its right.
pub fn validate_long_arc(p: usize, q: usize, left: PointSet, right: PointSet) -> bool {
    if p == 0 || q == 0 || p == q || p > 31 || q > 31 {
        return false;
    }
    if !left.is_subset(PointSet::open(0, p)) || !right.is_subset(PointSet::open(0, q)) || !left.is_disjoint(right) {
        return false;
    }
    let n = p.max(q);
    let r = long_representative(n, p, q, left, right);
    let anti = r.rotate(2 * n);
    compatible_a(&r, &anti) && relative_side(&r, &anti) == Some(Side::Right)
}

fn long_representative(n: usize, p: usize, q: usize, left: PointSet, right: PointSet) -> ArcA {
    let pos = |l: i32| label_to_position(n, l);
    let rset: PointSet = right
        .iter()
        .map(|i| pos(i as i32))
        .chain(left.iter().map(|i| pos(-(i as i32))))
        .collect();
    ArcA::new(pos(-(p as i32)), pos(q as i32), rset).expect("long arc data lies inside its span")
}

impl TypeBArc {
    pub fn ordinary(bottom: usize, top: usize, right: PointSet) -> Result<TypeBArc> {
        if bottom == 0 || bottom >= top || top > 31 {
            return Err(Error::InvalidArc(format!("ordinary arc needs 0 < {bottom} < {top}")));
        }
        if !right.is_subset(PointSet::open(bottom, top)) {
            return Err(Error::InvalidArc(format!("right set {right:?} outside ({bottom}, {top})")));
        }
        Ok(TypeBArc::Ordinary { bottom, top, right })
    }

    pub fn orbifold(top: usize, right: PointSet) -> Result<TypeBArc> {
        if top == 0 || top > 31 {
            return Err(Error::InvalidArc(format!("orbifold arc needs top {top} > 0")));
        }
        if !right.is_subset(PointSet::open(0, top)) {
            return Err(Error::InvalidArc(format!("right set {right:?} outside (0, {top})")));
        }
        Ok(TypeBArc::Orbifold { top, right })
    }

    pub fn orbifold_with_left(top: usize, left: PointSet) -> Result<TypeBArc> {
        TypeBArc::orbifold(top, PointSet::open(0, top).difference(left))
    }

    pub fn long(left_ep: usize, right_ep: usize, left: PointSet, right: PointSet) -> Result<TypeBArc> {
        if !validate_long_arc(left_ep, right_ep, left, right) {
            return Err(Error::InvalidArc(format!(
                "long arc ({left_ep}, {right_ep}, L={left:?}, R={right:?}) cannot be drawn"
            )));
        }
        Ok(TypeBArc::Long { left_ep, right_ep, left, right })
    }

    pub fn is_ordinary(&self) -> bool {
        matches!(self, TypeBArc::Ordinary { .. })
    }

    pub fn is_orbifold(&self) -> bool {
        matches!(self, TypeBArc::Orbifold { .. })
    }

    pub fn is_long(&self) -> bool {
        matches!(self, TypeBArc::Long { .. })
    }

    /// Largest numbered point the arc touches.
    pub fn max_point(&self) -> usize {
        match *self {
            TypeBArc::Ordinary { top, .. } | TypeBArc::Orbifold { top, .. } => top,
            TypeBArc::Long { left_ep, right_ep, .. } => left_ep.max(right_ep),
        }
    }

    /// Numbered endpoints.
    pub fn endpoints(&self) -> Vec<usize> {
        match *self {
            TypeBArc::Ordinary { bottom, top, .. } => vec![bottom, top],
            TypeBArc::Orbifold { top, .. } => vec![top],
            TypeBArc::Long { left_ep, right_ep, .. } => vec![left_ep, right_ep],
        }
    }

    /// `L(α)`: for ordinary and orbifold arcs the points between the
    /// endpoints (or below the top) that are not in `R(α)`.
    pub fn left_set(&self) -> PointSet {
        match *self {
            TypeBArc::Ordinary { bottom, top, right } => PointSet::open(bottom, top).difference(right),
            TypeBArc::Orbifold { top, right } => PointSet::open(0, top).difference(right),
            TypeBArc::Long { left, .. } => left,
        }
    }

    pub fn right_set(&self) -> PointSet {
        match *self {
            TypeBArc::Ordinary { right, .. } | TypeBArc::Orbifold { right, .. } | TypeBArc::Long { right, .. } => right,
        }
    }

    /// `B(α)`: points below both endpoints of a long arc that lie between its
    /// two pieces. Empty for other arcs.
    pub fn between_set(&self) -> PointSet {
        match *self {
            TypeBArc::Long { left_ep, right_ep, left, right } => {
                PointSet::open(0, left_ep.min(right_ep)).difference(left.union(right))
            }
            _ => PointSet::EMPTY,
        }
    }

    /// Does the arc (or either piece of a long arc) pass to the right of the
    /// numbered point `i`?
    pub fn passes_right_of(&self, i: usize) -> bool {
        match *self {
            TypeBArc::Ordinary { .. } | TypeBArc::Orbifold { .. } => self.left_set().contains(i),
            TypeBArc::Long { left_ep, right_ep, left, right } => {
                (i < left_ep && left.contains(i)) || (i < right_ep && !right.contains(i))
            }
        }
    }

    /// Does the arc (or either piece of a long arc) pass to the left of the
    /// numbered point `i`?
    pub fn passes_left_of(&self, i: usize) -> bool {
        match *self {
            TypeBArc::Ordinary { right, .. } | TypeBArc::Orbifold { right, .. } => right.contains(i),
            TypeBArc::Long { left_ep, right_ep, left, right } => {
                (i < left_ep && !left.contains(i)) || (i < right_ep && right.contains(i))
            }
        }
    }

    /// The centrally symmetric arc or pair of arcs on `2n` points.
    pub fn unfold(&self, n: usize) -> SymArcOrPair {
        let pos = |l: i32| label_to_position(n, l);
        match *self {
            TypeBArc::Orbifold { top, right } => {
                let rset: PointSet = (1..top)
                    .map(|i| if right.contains(i) { pos(i as i32) } else { pos(-(i as i32)) })
                    .collect();
                SymArcOrPair::Symmetric(
                    ArcA::new(pos(-(top as i32)), pos(top as i32), rset).expect("symmetric arc"),
                )
            }
            TypeBArc::Ordinary { bottom, top, right } => {
                let rset: PointSet = right.iter().map(|i| pos(i as i32)).collect();
                SymArcOrPair::Pair(ArcA::new(pos(bottom as i32), pos(top as i32), rset).expect("positive arc"))
            }
            TypeBArc::Long { left_ep, right_ep, left, right } => {
                SymArcOrPair::Pair(long_representative(n, left_ep, right_ep, left, right))
            }
        }
    }

    pub fn unfolded_arcs(&self, n: usize) -> Vec<ArcA> {
        self.unfold(n).arcs(n)
    }

    /// The join-irreducible signed permutation whose diagram is this arc.
    pub fn to_join_irreducible(&self, n: usize) -> SignedPermutation {
        let neg = |s: PointSet| s.to_vec().into_iter().rev().map(|i| -(i as i32)).collect::<Vec<_>>();
        let pos = |s: PointSet| s.iter().map(|i| i as i32).collect::<Vec<_>>();
        let mut w: Vec<i32> = Vec::with_capacity(n);
        match *self {
            TypeBArc::Orbifold { top, right } => {
                w.push(-(top as i32));
                w.extend(neg(self.left_set()));
                w.extend(pos(right));
                w.extend(top as i32 + 1..=n as i32);
            }
            TypeBArc::Ordinary { bottom, top, right } => {
                w.extend(1..bottom as i32);
                w.extend(pos(self.left_set()));
                w.push(top as i32);
                w.push(bottom as i32);
                w.extend(pos(right));
                w.extend(top as i32 + 1..=n as i32);
            }
            TypeBArc::Long { left_ep: p, right_ep: q, left, right } => {
                w.extend(pos(self.between_set()));
                if p < q {
                    w.extend(pos(PointSet::open(p, q).difference(right)));
                    w.push(q as i32);
                    w.push(-(p as i32));
                    w.extend(neg(left));
                    w.extend(pos(right));
                    w.extend(q as i32 + 1..=n as i32);
                } else {
                    w.push(q as i32);
                    w.push(-(p as i32));
                    w.extend(neg(left));
                    w.extend(pos(right));
                    w.extend(pos(PointSet::open(q, p).difference(left)));
                    w.extend(p as i32 + 1..=n as i32);
                }
            }
        }
        SignedPermutation::new(w).expect("join-irreducible word is a signed permutation")
    }

    pub fn from_join_irreducible(pi: &SignedPermutation) -> Result<TypeBArc> {
        match delta_b_orb(pi).arcs.as_slice() {
            [a] => Ok(*a),
            _ => Err(Error::NotJoinIrreducible),
        }
    }

    pub fn shard_descriptor(&self) -> ShardDescriptorB {
        let signed = |s: PointSet| s.iter().map(|i| i as i32).collect::<Vec<_>>();
        match *self {
            TypeBArc::Orbifold { top, right } => ShardDescriptorB {
                equality: ShardEquality::Zero(top),
                lower: signed(right),
                upper: signed(self.left_set()),
            },
            TypeBArc::Ordinary { bottom, top, right } => ShardDescriptorB {
                equality: ShardEquality::Equal(bottom, top),
                lower: signed(right),
                upper: signed(self.left_set()),
            },
            TypeBArc::Long { left_ep: p, right_ep: q, left, right } => {
                let mut lower: Vec<i32> = signed(right);
                lower.extend(left.iter().map(|i| -(i as i32)));
                lower.sort_unstable();
                let upper = (-(p as i32) + 1..q as i32).filter(|&i| i != 0 && !lower.contains(&i)).collect();
                ShardDescriptorB { equality: ShardEquality::Opposite(p, q), lower, upper }
            }
        }
    }
}

impl fmt::Debug for TypeBArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TypeBArc::Ordinary { bottom, top, right } => {
                write!(f, "Ord({bottom},{top}")?;
                if !right.is_empty() {
                    write!(f, ",R={right:?}")?;
                }
                write!(f, ")")
            }
            TypeBArc::Orbifold { top, right } => {
                write!(f, "Orb({top}")?;
                if !right.is_empty() {
                    write!(f, ",R={right:?}")?;
                }
                write!(f, ")")
            }
            TypeBArc::Long { left_ep, right_ep, left, right } => {
                write!(f, "Long({left_ep},{right_ep}")?;
                if !left.is_empty() {
                    write!(f, ",L={left:?}")?;
                }
                if !right.is_empty() {
                    write!(f, ",R={right:?}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Equality part of a type-B shard: `x_p = 0`, `x_p = x_q`, or `x_q = -x_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShardEquality {
    Zero(usize),
    Equal(usize, usize),
    Opposite(usize, usize),
}

/// A type-B shard as inequalities. With `x_{-i} = -x_i` and `v` the common
/// value on the equality (`0`, `x_p`, or `x_q`): `v <= x_i` for `i` in
/// `lower` and `v >= x_i` for `i` in `upper`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShardDescriptorB {
    pub equality: ShardEquality,
    pub lower: Vec<i32>,
    pub upper: Vec<i32>,
}

/// An arc of the symmetric model: a single arc fixed by the half turn, or a
/// pair of distinct antipodal arcs represented by one of them. For an
/// overlapping pair the representative is the arc lying right of its
/// antipode; otherwise it is the arc with both endpoints positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymArcOrPair {
    Symmetric(ArcA),
    Pair(ArcA),
}

impl SymArcOrPair {
    /// Group an arc on `2n` points with its antipode.
    pub fn from_arc(n: usize, a: ArcA) -> Result<SymArcOrPair> {
        let anti = a.rotate(2 * n);
        if anti == a {
            return Ok(SymArcOrPair::Symmetric(a));
        }
        if !compatible_a(&a, &anti) {
            return Err(Error::InvalidPair(format!("{a:?} crosses its antipode")));
        }
        let overlapping = a.bottom <= n && a.top > n;
        let rep = if overlapping {
            if relative_side(&a, &anti) == Some(Side::Right) {
                a
            } else {
                anti
            }
        } else if a.bottom > n {
            a
        } else {
            anti
        };
        Ok(SymArcOrPair::Pair(rep))
    }

    pub fn arcs(&self, n: usize) -> Vec<ArcA> {
        match *self {
            SymArcOrPair::Symmetric(a) => vec![a],
            SymArcOrPair::Pair(a) => vec![a, a.rotate(2 * n)],
        }
    }

    pub fn representative(&self) -> ArcA {
        match *self {
            SymArcOrPair::Symmetric(a) | SymArcOrPair::Pair(a) => a,
        }
    }

    pub fn is_overlapping(&self, n: usize) -> bool {
        match *self {
            SymArcOrPair::Symmetric(_) => false,
            SymArcOrPair::Pair(a) => a.bottom <= n && a.top > n,
        }
    }

    /// The type-B arc of the orbifold model.
    pub fn fold(&self, n: usize) -> Result<TypeBArc> {
        let label = |p: usize| position_to_label(n, p);
        match *self {
            SymArcOrPair::Symmetric(a) => {
                if a.rotate(2 * n) != a {
                    return Err(Error::InvalidPair(format!("{a:?} is not symmetric")));
                }
                let right = a.right.iter().map(label).filter(|&l| l > 0).map(|l| l as usize).collect();
                TypeBArc::orbifold(label(a.top) as usize, right)
            }
            SymArcOrPair::Pair(a) => {
                let canon = SymArcOrPair::from_arc(n, a)?;
                if canon != *self {
                    return Err(Error::InvalidPair(format!("{a:?} is not the representative of its pair")));
                }
                if !self.is_overlapping(n) {
                    let right = a.right.iter().map(|p| label(p) as usize).collect();
                    return TypeBArc::ordinary(label(a.bottom) as usize, label(a.top) as usize, right);
                }
                let right = a.right.iter().map(label).filter(|&l| l > 0).map(|l| l as usize).collect();
                let left = a.right.iter().map(label).filter(|&l| l < 0).map(|l| (-l) as usize).collect();
                TypeBArc::long((-label(a.bottom)) as usize, label(a.top) as usize, left, right)
            }
        }
    }
}

/// A set of pairwise compatible type-B arcs, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramB {
    pub n: usize,
    pub arcs: Vec<TypeBArc>,
}

impl DiagramB {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = TypeBArc>) -> Result<DiagramB> {
        let set: BTreeSet<TypeBArc> = arcs.into_iter().collect();
        let d = DiagramB { n, arcs: set.into_iter().collect() };
        if let Some(a) = d.arcs.iter().find(|a| a.max_point() > n) {
            return Err(Error::InvalidArc(format!("{a:?} exceeds {n} points")));
        }
        if !d.is_noncrossing() {
            return Err(Error::NotADiagram(format!("{:?}", d.arcs)));
        }
        Ok(d)
    }

    pub fn empty(n: usize) -> DiagramB {
        DiagramB { n, arcs: Vec::new() }
    }

    pub fn is_noncrossing(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .all(|(i, a)| self.arcs[i + 1..].iter().all(|b| compatible_b(self.n, a, b)))
    }

    /// The centrally symmetric type-A diagram on `2n` points.
    pub fn unfold(&self) -> DiagramA {
        let mut arcs: Vec<ArcA> = self.arcs.iter().flat_map(|a| a.unfolded_arcs(self.n)).collect();
        arcs.sort();
        DiagramA { n: 2 * self.n, arcs }
    }
}

/// Can the two arcs appear together in a type-B noncrossing arc diagram?
pub fn compatible_b(n: usize, a: &TypeBArc, b: &TypeBArc) -> bool {
    if a == b {
        return false;
    }
    let (ua, ub) = (a.unfolded_arcs(n), b.unfolded_arcs(n));
    ua.iter().all(|x| ub.iter().all(|y| compatible_a(x, y)))
}

/// `δ°`: fold the symmetric diagram of the long one-line word.
pub fn delta_b_orb(pi: &SignedPermutation) -> DiagramB {
    let n = pi.n();
    let d = delta_a(&pi.unfold());
    let groups: BTreeSet<SymArcOrPair> = d
        .arcs
        .iter()
        .map(|&a| SymArcOrPair::from_arc(n, a).expect("arcs of a diagram are compatible"))
        .collect();
    let mut arcs: Vec<TypeBArc> = groups
        .iter()
        .map(|g| g.fold(n).expect("groups of a symmetric diagram fold"))
        .collect();
    arcs.sort();
    DiagramB { n, arcs }
}

pub fn delta_b_orb_inv(d: &DiagramB) -> Result<SignedPermutation> {
    if !d.is_noncrossing() {
        return Err(Error::NotADiagram(format!("{:?}", d.arcs)));
    }
    SignedPermutation::fold(&delta_a_inv(&d.unfold())?)
}

/// `δ°` read directly off the short one-line word, without unfolding.
pub fn delta_b_orb_direct(pi: &SignedPermutation) -> DiagramB {
    let w = pi.short();
    let n = w.len();
    let at = |c: i32| w.iter().position(|&v| v == c);
    let mut arcs = Vec::new();
    if w[0] < 0 {
        let top = w[0].unsigned_abs() as usize;
        let right = (1..top).filter(|&c| at(c as i32).is_some()).collect();
        arcs.push(TypeBArc::Orbifold { top, right });
    }
    for i in 0..n - 1 {
        let (a, b) = (w[i], w[i + 1]);
        if a < b {
            continue;
        }
        if b > 0 {
            let right = (b + 1..a).filter(|&c| matches!(at(c), Some(j) if j > i + 1)).map(|c| c as usize).collect();
            arcs.push(TypeBArc::Ordinary { bottom: b as usize, top: a as usize, right });
        } else if a < 0 {
            let (lo, hi) = (-a, -b);
            let right = (lo + 1..hi)
                .filter(|&c| match at(-c) {
                    Some(j) => j < i,
                    None => true,
                })
                .map(|c| c as usize)
                .collect();
            arcs.push(TypeBArc::Ordinary { bottom: lo as usize, top: hi as usize, right });
        } else {
            let (p, q) = ((-b) as usize, a as usize);
            let right = (1..q).filter(|&c| matches!(at(c as i32), Some(j) if j > i + 1)).collect();
            let left = (1..p).filter(|&c| matches!(at(-(c as i32)), Some(j) if j > i + 1)).collect();
            arcs.push(TypeBArc::Long { left_ep: p, right_ep: q, left, right });
        }
    }
    arcs.sort();
    DiagramB { n, arcs }
}

/// Every type-B arc on `n` points.
pub fn enumerate_arcs_b(n: usize) -> Vec<TypeBArc> {
    let mut out = Vec::new();
    for q in 1..=n {
        for right in PointSet::open(0, q).subsets() {
            out.push(TypeBArc::Orbifold { top: q, right });
        }
        for p in 1..q {
            for right in PointSet::open(p, q).subsets() {
                out.push(TypeBArc::Ordinary { bottom: p, top: q, right });
            }
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            if p == q {
                continue;
            }
            for left in PointSet::open(0, p).subsets() {
                for right in PointSet::open(0, q).subsets() {
                    if validate_long_arc(p, q, left, right) {
                        out.push(TypeBArc::Long { left_ep: p, right_ep: q, left, right });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Every type-B noncrossing arc diagram on `n` points, as the cliques of the
/// compatibility graph.
pub fn enumerate_diagrams_b(n: usize) -> Result<Vec<DiagramB>> {
    if n > MAX_DIAGRAM_RANK {
        return Err(Error::ScopeExceeded(format!("diagram enumeration limited to n <= {MAX_DIAGRAM_RANK}")));
    }
    let arcs = enumerate_arcs_b(n);
    Ok(cliques(n, &arcs))
}

/// Every noncrossing diagram using only arcs from `arcs`.
pub fn cliques(n: usize, arcs: &[TypeBArc]) -> Vec<DiagramB> {
    let m = arcs.len();
    let mut later = vec![FixedBitSet::with_capacity(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if compatible_b(n, &arcs[i], &arcs[j]) {
                later[i].insert(j);
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut all = FixedBitSet::with_capacity(m);
    all.insert_range(..);
    extend_cliques(arcs, &later, &all, &mut chosen, &mut out, n);
    out.sort();
    out
}

fn extend_cliques(
    arcs: &[TypeBArc],
    later: &[FixedBitSet],
    cands: &FixedBitSet,
    chosen: &mut Vec<usize>,
    out: &mut Vec<DiagramB>,
    n: usize,
) {
    out.push(DiagramB { n, arcs: chosen.iter().map(|&i| arcs[i]).collect() });
    for i in cands.ones() {
        let mut next = cands.clone();
        next.intersect_with(&later[i]);
        chosen.push(i);
        extend_cliques(arcs, later, &next, chosen, out, n);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak::{CoxeterElement, WeakOrder};

    fn pts(v: &[usize]) -> PointSet {
        v.iter().copied().collect()
    }

    fn sp(v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    fn long(p: usize, q: usize, l: &[usize], r: &[usize]) -> TypeBArc {
        TypeBArc::long(p, q, pts(l), pts(r)).unwrap()
    }

    #[test]
    fn long_validity_at_rank_two() {
        assert!(validate_long_arc(1, 2, PointSet::EMPTY, PointSet::EMPTY));
        assert!(!validate_long_arc(1, 2, PointSet::EMPTY, pts(&[1])));
        let longs: Vec<_> = enumerate_arcs_b(2).into_iter().filter(|a| a.is_long()).collect();
        assert_eq!(longs, vec![long(1, 2, &[], &[]), long(2, 1, &[], &[])]);
    }

    #[test]
    fn arc_counts_match_join_irreducibles() {
        for n in 1..=4 {
            let w = WeakOrder::<SignedPermutation>::new(n).unwrap();
            assert_eq!(enumerate_arcs_b(n).len(), w.lattice().join_irreducibles().len(), "n={n}");
        }
    }

    #[test]
    fn fold_examples() {
        let n = 2;
        let sym = TypeBArc::Orbifold { top: 1, right: PointSet::EMPTY }.unfold(n);
        assert!(matches!(sym, SymArcOrPair::Symmetric(_)));
        assert_eq!(sym.fold(n).unwrap(), TypeBArc::Orbifold { top: 1, right: PointSet::EMPTY });
        // arc from 1 to 2 and its antipode from -2 to -1
        let a = ArcA::new(3, 4, PointSet::EMPTY).unwrap();
        assert_eq!(SymArcOrPair::from_arc(n, a).unwrap().fold(n).unwrap(), TypeBArc::ordinary(1, 2, PointSet::EMPTY).unwrap());
        let d = delta_b_orb(&SignedPermutation::from_word(2, &[0, 1]).unwrap());
        assert_eq!(d.arcs, vec![long(1, 2, &[], &[])]);
    }

    #[test]
    fn unfold_fold_roundtrip() {
        for n in 1..=4 {
            for a in enumerate_arcs_b(n) {
                let u = a.unfold(n);
                assert_eq!(u.fold(n).unwrap(), a);
                assert_eq!(SymArcOrPair::from_arc(n, u.representative()).unwrap(), u);
            }
        }
    }

    #[test]
    fn delta_examples() {
        assert!(delta_b_orb(&SignedPermutation::identity(3)).arcs.is_empty());
        assert_eq!(
            delta_b_orb(&sp(&[-1, 2, 3])).arcs,
            vec![TypeBArc::Orbifold { top: 1, right: PointSet::EMPTY }]
        );
        let d = delta_b_orb(&sp(&[-4, 3, 5, 2, -1]));
        let mut expected = vec![
            TypeBArc::ordinary(2, 5, PointSet::EMPTY).unwrap(),
            TypeBArc::orbifold(4, pts(&[2, 3])).unwrap(),
            long(1, 2, &[], &[]),
        ];
        expected.sort();
        assert_eq!(d.arcs, expected);
    }

    #[test]
    fn delta_roundtrip_b4() {
        for w in SignedPermutation::all(4) {
            let d = delta_b_orb(&w);
            assert_eq!(d.arcs.len(), w.cover_reflections().len());
            assert!(d.is_noncrossing());
            assert_eq!(delta_b_orb_inv(&d).unwrap(), w);
        }
    }

    #[test]
    fn direct_description_agrees() {
        for w in SignedPermutation::all(4) {
            assert_eq!(delta_b_orb_direct(&w), delta_b_orb(&w), "{w}");
        }
    }

    #[test]
    fn join_irreducible_formulas() {
        let orb = TypeBArc::orbifold_with_left(2, pts(&[1])).unwrap();
        assert_eq!(orb.to_join_irreducible(3), sp(&[-2, -1, 3]));
        assert_eq!(long(1, 2, &[], &[]).to_join_irreducible(3), sp(&[2, -1, 3]));
        assert_eq!(long(2, 1, &[], &[]).to_join_irreducible(3), sp(&[1, -2, 3]));
        for n in 1..=4 {
            for a in enumerate_arcs_b(n) {
                let j = a.to_join_irreducible(n);
                assert_eq!(delta_b_orb(&j).arcs, vec![a], "{a:?} -> {j}");
                assert_eq!(TypeBArc::from_join_irreducible(&j).unwrap(), a);
            }
        }
        assert_eq!(
            TypeBArc::from_join_irreducible(&SignedPermutation::identity(3)),
            Err(Error::NotJoinIrreducible)
        );
    }

    #[test]
    fn compatibility_examples() {
        let d = delta_b_orb(&sp(&[-4, 3, 5, 2, -1]));
        assert!(compatible_b(5, &d.arcs[0], &d.arcs[1]));
        let o1 = TypeBArc::orbifold(1, PointSet::EMPTY).unwrap();
        let o2 = TypeBArc::orbifold(2, PointSet::EMPTY).unwrap();
        assert!(!compatible_b(2, &o1, &o2));
    }

    #[test]
    fn compatibility_matches_delta_images() {
        for n in 2..=3 {
            let mut together = BTreeSet::new();
            for w in SignedPermutation::all(n) {
                let d = delta_b_orb(&w);
                for a in &d.arcs {
                    for b in &d.arcs {
                        if a != b {
                            together.insert((*a, *b));
                        }
                    }
                }
            }
            let arcs = enumerate_arcs_b(n);
            for a in &arcs {
                for b in &arcs {
                    assert_eq!(compatible_b(n, a, b), together.contains(&(*a, *b)), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn diagram_counts() {
        assert_eq!(enumerate_diagrams_b(2).unwrap().len(), 8);
        assert_eq!(enumerate_diagrams_b(3).unwrap().len(), 48);
        assert!(enumerate_diagrams_b(6).is_err());
    }

    #[test]
    fn descriptors() {
        let d = TypeBArc::orbifold(1, PointSet::EMPTY).unwrap().shard_descriptor();
        assert_eq!(d.equality, ShardEquality::Zero(1));
        assert!(d.lower.is_empty() && d.upper.is_empty());
        let d = TypeBArc::orbifold_with_left(2, pts(&[1])).unwrap().shard_descriptor();
        assert_eq!((d.lower.clone(), d.upper.clone()), (vec![], vec![1]));
        let arcs = enumerate_arcs_b(4);
        let set: std::collections::HashSet<_> = arcs.iter().map(|a| a.shard_descriptor()).collect();
        assert_eq!(set.len(), arcs.len());
    }

    #[test]
    fn serde_shapes() {
        let a = long(2, 1, &[], &[]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"kind":"long","left":2,"right_ep":1,"L":[],"R":[]}"#);
        assert_eq!(serde_json::from_str::<TypeBArc>(&s).unwrap(), a);
        let o = TypeBArc::orbifold(3, pts(&[1])).unwrap();
        assert_eq!(serde_json::to_string(&o).unwrap(), r#"{"kind":"orbifold","top":3,"right":[1]}"#);
        assert!(serde_json::from_str::<TypeBArc>(r#"{"kind":"long","left":1,"right_ep":2,"L":[],"R":[1]}"#).is_err());
    }
}
