//! Arcs and noncrossing arc diagrams on `n` points in a vertical line.
//!
//! `L(α)` is the set of points lying to the left of the arc α (the arc passes
//! to their right) and `R(α)` the points lying to its right.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::weak::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An arc from `bottom` up to `top`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ArcARepr", into = "ArcARepr")]
pub struct ArcA {
    pub bottom: usize,
    pub top: usize,
    pub left: PointSet,
    pub right: PointSet,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ArcARepr {
    Ordinary { bottom: usize, top: usize, right: PointSet },
}

impl TryFrom<ArcARepr> for ArcA {
    type Error = Error;
    fn try_from(r: ArcARepr) -> Result<Self> {
        let ArcARepr::Ordinary { bottom, top, right } = r;
        ArcA::new(bottom, top, right)
    }
}

impl From<ArcA> for ArcARepr {
    fn from(a: ArcA) -> Self {
        ArcARepr::Ordinary { bottom: a.bottom, top: a.top, right: a.right }
    }
}

impl ArcA {
    /// The arc with the given right set; every other point strictly between
    /// the endpoints is on the left.
    pub fn new(bottom: usize, top: usize, right: PointSet) -> Result<ArcA> {
        if bottom == 0 || bottom >= top || top > 63 {
            return Err(Error::InvalidArc(format!("endpoints {bottom} < {top} required")));
        }
        let span = PointSet::open(bottom, top);
        if !right.is_subset(span) {
            return Err(Error::InvalidArc(format!("right set {right:?} not inside ({bottom}, {top})")));
        }
        Ok(ArcA { bottom, top, left: span.difference(right), right })
    }

    pub fn with_left(bottom: usize, top: usize, left: PointSet) -> Result<ArcA> {
        ArcA::new(bottom, top, PointSet::open(bottom, top).difference(left))
    }

    pub fn interior(&self) -> PointSet {
        PointSet::open(self.bottom, self.top)
    }

    pub fn spans(&self, k: usize) -> bool {
        self.bottom < k && k < self.top
    }

    /// Side of the interior point `k` relative to the arc.
    pub fn side_of(&self, k: usize) -> Side {
        debug_assert!(self.spans(k));
        if self.left.contains(k) {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Image under the half-turn of `m` points: `i -> m + 1 - i`.
    pub fn rotate(&self, m: usize) -> ArcA {
        ArcA {
            bottom: m + 1 - self.top,
            top: m + 1 - self.bottom,
            left: self.right.mirror(m),
            right: self.left.mirror(m),
        }
    }

    /// The single-descent permutation `1 … (p-1) L q p R (q+1) … n`.
    pub fn to_join_irreducible(&self, n: usize) -> Permutation {
        let mut w: Vec<usize> = (1..self.bottom).collect();
        w.extend(self.left.iter());
        w.push(self.top);
        w.push(self.bottom);
        w.extend(self.right.iter());
        w.extend(self.top + 1..=n);
        Permutation::new(w).expect("arc lies inside 1..=n")
    }

    /// Inverse of [`ArcA::to_join_irreducible`].
    pub fn from_join_irreducible(pi: &Permutation) -> Result<ArcA> {
        let d = delta_a(pi);
        match d.arcs.as_slice() {
            [a] => Ok(*a),
            _ => Err(Error::NotJoinIrreducible),
        }
    }

    pub fn is_subarc_of(&self, other: &ArcA) -> bool {
        other.top >= self.top
            && self.bottom >= other.bottom
            && self.right == other.right.intersection(self.interior())
    }

    pub fn shard_descriptor(&self) -> ShardDescriptorA {
        ShardDescriptorA { p: self.bottom, q: self.top, lower: self.right, upper: self.left }
    }
}

impl fmt::Debug for ArcA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}", self.bottom, self.top)?;
        if !self.left.is_empty() {
            write!(f, ",L={:?}", self.left)?;
        }
        if !self.right.is_empty() {
            write!(f, ",R={:?}", self.right)?;
        }
        write!(f, ")")
    }
}

/// The forced left/right relation between two arcs, if any: `Some(Left)`
/// when `a` is left of `b` wherever both are present. `Err(())` when the
/// forced relations disagree, so the arcs cross.
fn forced_relation(a: &ArcA, b: &ArcA) -> std::result::Result<Option<Side>, ()> {
    let lo = a.bottom.max(b.bottom);
    let hi = a.top.min(b.top);
    let mut rel = None;
    for k in lo..=hi.min(63) {
        if lo > hi {
            break;
        }
        let forced = match (a.spans(k), b.spans(k)) {
            (true, true) => match (a.side_of(k), b.side_of(k)) {
                (Side::Left, Side::Right) => Some(Side::Right),
                (Side::Right, Side::Left) => Some(Side::Left),
                _ => None,
            },
            // k is an endpoint of a lying on b's interior
            (false, true) => Some(b.side_of(k)),
            (true, false) => Some(match a.side_of(k) {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            }),
            (false, false) => None,
        };
        if let Some(s) = forced {
            match rel {
                None => rel = Some(s),
                Some(r) if r != s => return Err(()),
                _ => {}
            }
        }
    }
    Ok(rel)
}

/// Can `a` and `b` appear together in a noncrossing arc diagram?
pub fn compatible_a(a: &ArcA, b: &ArcA) -> bool {
    a.top != b.top && a.bottom != b.bottom && forced_relation(a, b).is_ok()
}

/// `Some(Side::Left)` when `a` lies left of `b` on their common span,
/// `Some(Side::Right)` when right, `None` when nothing forces a relation.
/// Meaningful only for compatible arcs.
pub fn relative_side(a: &ArcA, b: &ArcA) -> Option<Side> {
    forced_relation(a, b).ok().flatten()
}

/// Inequalities cutting out the shard of an arc: `x_p = x_q`, `x_p <= x_i`
/// for `i` in `lower` and `x_p >= x_i` for `i` in `upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShardDescriptorA {
    pub p: usize,
    pub q: usize,
    pub lower: PointSet,
    pub upper: PointSet,
}

/// A set of pairwise compatible arcs on `n` points, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramA {
    pub n: usize,
    pub arcs: Vec<ArcA>,
}

impl DiagramA {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = ArcA>) -> Result<DiagramA> {
        let set: BTreeSet<ArcA> = arcs.into_iter().collect();
        let arcs: Vec<ArcA> = set.into_iter().collect();
        if let Some(a) = arcs.iter().find(|a| a.top > n) {
            return Err(Error::InvalidArc(format!("{a:?} exceeds {n} points")));
        }
        let d = DiagramA { n, arcs };
        if !d.is_noncrossing() {
            return Err(Error::NotADiagram(format!("{:?}", d.arcs)));
        }
        Ok(d)
    }

    pub fn empty(n: usize) -> DiagramA {
        DiagramA { n, arcs: Vec::new() }
    }

    pub fn is_noncrossing(&self) -> bool {
        is_diagram_a(&self.arcs)
    }

    pub fn rotate_half_turn(&self) -> DiagramA {
        let mut arcs: Vec<ArcA> = self.arcs.iter().map(|a| a.rotate(self.n)).collect();
        arcs.sort();
        DiagramA { n: self.n, arcs }
    }
}

pub fn is_diagram_a(arcs: &[ArcA]) -> bool {
    arcs.iter()
        .enumerate()
        .all(|(i, a)| arcs[i + 1..].iter().all(|b| compatible_a(a, b)))
}

/// One arc per descent `π_i > π_{i+1}`; values between them occurring before
/// position `i` lie left of the arc, those occurring after `i+1` lie right.
pub fn delta_a(pi: &Permutation) -> DiagramA {
    let n = pi.n();
    let mut arcs = Vec::new();
    for i in pi.descents() {
        let (q, p) = (pi.at(i), pi.at(i + 1));
        let right: PointSet = (i + 2..=n).map(|j| pi.at(j)).filter(|&v| p < v && v < q).collect();
        arcs.push(ArcA::new(p, q, right).expect("descent gives an arc"));
    }
    arcs.sort();
    DiagramA { n, arcs }
}

/// Reads a permutation off a diagram by repeatedly removing the lowest
/// block that nothing lies to the left of, writing its points in decreasing
/// order.
pub fn delta_a_inv(d: &DiagramA) -> Result<Permutation> {
    if !d.is_noncrossing() {
        return Err(Error::NotADiagram(format!("{:?}", d.arcs)));
    }
    let n = d.n;
    let mut block_of: Vec<usize> = (0..=n).collect();
    fn root(b: &mut [usize], mut x: usize) -> usize {
        while b[x] != x {
            x = b[x];
        }
        x
    }
    for a in &d.arcs {
        let (x, y) = (root(&mut block_of, a.bottom), root(&mut block_of, a.top));
        block_of[x.max(y)] = x.min(y);
    }
    let roots: Vec<usize> = (0..=n).map(|x| root(&mut block_of, x)).collect();
    let mut blocks: Vec<(PointSet, Vec<ArcA>)> = Vec::new();
    for r in 1..=n {
        if roots[r] == r {
            let pts: PointSet = (1..=n).filter(|&x| roots[x] == r).collect();
            let arcs = d.arcs.iter().copied().filter(|a| roots[a.bottom] == r).collect();
            blocks.push((pts, arcs));
        }
    }
    let mut alive = vec![true; blocks.len()];
    let mut removed = PointSet::EMPTY;
    let mut word = Vec::with_capacity(n);
    while word.len() < n {
        let next = (0..blocks.len())
            .filter(|&b| alive[b])
            .find(|&b| {
                let (pts, arcs) = &blocks[b];
                let (lo, hi) = (pts.iter().next().unwrap(), pts.iter().last().unwrap());
                (lo..=hi).filter(|k| !removed.contains(*k)).all(|k| {
                    if pts.contains(k) {
                        blocks.iter().enumerate().filter(|(c, _)| *c != b && alive[*c]).all(|(_, (_, other))| {
                            other.iter().all(|a| !a.spans(k) || a.side_of(k) == Side::Left)
                        })
                    } else {
                        arcs.iter().all(|a| !a.spans(k) || a.side_of(k) == Side::Right)
                    }
                })
            })
            .ok_or_else(|| Error::NotADiagram("no left block".into()))?;
        alive[next] = false;
        let pts = blocks[next].0;
        removed = removed.union(pts);
        word.extend(pts.to_vec().into_iter().rev());
    }
    Permutation::new(word)
}

/// Every arc on `n` points.
pub fn enumerate_arcs_a(n: usize) -> Vec<ArcA> {
    let mut out = Vec::new();
    for p in 1..=n {
        for q in p + 1..=n {
            for right in PointSet::open(p, q).subsets() {
                out.push(ArcA::new(p, q, right).expect("valid arc"));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak::CoxeterElement;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn pts(v: &[usize]) -> PointSet {
        v.iter().copied().collect()
    }

    fn arc(b: usize, t: usize, right: &[usize]) -> ArcA {
        ArcA::new(b, t, pts(right)).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert!(delta_a(&Permutation::identity(4)).arcs.is_empty());
        let d = delta_a(&Permutation::longest(4));
        assert_eq!(d.arcs, vec![arc(1, 2, &[]), arc(2, 3, &[]), arc(3, 4, &[])]);
        let d = delta_a(&p(&[6, 4, 3, 7, 1, 2, 5]));
        assert_eq!(d.arcs, vec![arc(1, 7, &[2, 5]), arc(3, 4, &[]), arc(4, 6, &[5])]);
        assert_eq!(d.arcs[0].left, pts(&[3, 4, 6]));
    }

    #[test]
    fn inverse_on_worked_example() {
        let w = p(&[3, 8, 6, 7, 5, 2, 4, 1]);
        assert_eq!(delta_a_inv(&delta_a(&w)).unwrap(), w);
    }

    #[test]
    fn roundtrip_s5() {
        for w in Permutation::all(5) {
            assert_eq!(delta_a_inv(&delta_a(&w)).unwrap(), w);
        }
    }

    #[test]
    fn empty_diagram_gives_identity() {
        assert_eq!(delta_a_inv(&DiagramA::empty(4)).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn compatibility_examples() {
        let a = arc(1, 3, &[2]);
        assert!(!compatible_a(&a, &a));
        assert!(compatible_a(&arc(3, 4, &[]), &arc(1, 7, &[2, 5])));
        // (2,4) starts right of (1,3); it must keep 3 on its left.
        assert!(compatible_a(&arc(1, 3, &[2]), &ArcA::with_left(2, 4, pts(&[3])).unwrap()));
        assert!(!compatible_a(&arc(1, 3, &[2]), &arc(2, 4, &[3])));
    }

    #[test]
    fn compatibility_matches_delta_images() {
        for n in 2..=4 {
            let arcs = enumerate_arcs_a(n);
            let mut together = BTreeSet::new();
            for w in Permutation::all(n) {
                let d = delta_a(&w);
                for a in &d.arcs {
                    for b in &d.arcs {
                        together.insert((*a, *b));
                    }
                }
            }
            for a in &arcs {
                for b in &arcs {
                    assert_eq!(compatible_a(a, b), a != b && together.contains(&(*a, *b)), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn join_irreducible_words() {
        assert_eq!(arc(1, 2, &[]).to_join_irreducible(2), p(&[2, 1]));
        assert_eq!(arc(1, 3, &[2]).to_join_irreducible(3), p(&[3, 1, 2]));
        for n in 2..=5 {
            for a in enumerate_arcs_a(n) {
                let j = a.to_join_irreducible(n);
                assert_eq!(j.descents().len(), 1);
                assert_eq!(delta_a(&j).arcs, vec![a]);
            }
        }
    }

    #[test]
    fn subarc_examples() {
        let big = arc(1, 7, &[3, 4, 6]);
        assert!(big.is_subarc_of(&big));
        assert!(arc(2, 3, &[]).is_subarc_of(&big));
        assert!(!arc(2, 4, &[]).is_subarc_of(&big));
    }

    #[test]
    fn subarc_is_a_partial_order() {
        let arcs = enumerate_arcs_a(5);
        for a in &arcs {
            assert!(a.is_subarc_of(a));
            for b in &arcs {
                if a != b && a.is_subarc_of(b) {
                    assert!(!b.is_subarc_of(a));
                    for c in &arcs {
                        if b.is_subarc_of(c) {
                            assert!(a.is_subarc_of(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn arc_counts() {
        assert_eq!(enumerate_arcs_a(2).len(), 1);
        assert_eq!(enumerate_arcs_a(3).len(), 4);
        assert_eq!(enumerate_arcs_a(4).len(), 11);
    }

    #[test]
    fn descriptors_distinct() {
        let arcs = enumerate_arcs_a(5);
        let set: BTreeSet<_> = arcs.iter().map(|a| {
            let d = a.shard_descriptor();
            (d.p, d.q, d.lower, d.upper)
        }).collect();
        assert_eq!(set.len(), arcs.len());
        let d = arc(1, 3, &[2]).shard_descriptor();
        assert_eq!((d.p, d.q, d.lower, d.upper), (1, 3, pts(&[2]), PointSet::EMPTY));
    }

    #[test]
    fn half_turn_matches_w0_conjugation() {
        for m in [4, 6] {
            for w in Permutation::all(m) {
                assert_eq!(delta_a(&w.w0_conjugate()), delta_a(&w).rotate_half_turn());
            }
        }
        let d = delta_a(&p(&[3, 1, 4, 2]));
        assert_eq!(d.rotate_half_turn().rotate_half_turn(), d);
    }

    #[test]
    fn serde_shape() {
        let a = arc(1, 3, &[2]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"kind":"ordinary","bottom":1,"top":3,"right":[2]}"#);
        assert_eq!(serde_json::from_str::<ArcA>(&s).unwrap(), a);
        assert!(serde_json::from_str::<ArcA>(r#"{"kind":"ordinary","bottom":3,"top":1,"right":[]}"#).is_err());
    }
}
