//! Named congruences of the weak order on signed permutations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arcs_b::{DiagramB, TypeBArc};
use crate::error::{Error, Result};
use crate::forcing::ArcCongruence;
use crate::pointset::PointSet;
use crate::weak::SignedPermutation;

pub type CongruenceB = ArcCongruence<TypeBArc>;

/// The arc of the join-irreducible `s_{i1} s_{i2} …`.
pub fn arc_of_word(n: usize, word: &[usize]) -> Result<TypeBArc> {
    TypeBArc::from_join_irreducible(&SignedPermutation::from_word(n, word)?)
}

fn arcs_of_words(n: usize, words: &[&[usize]]) -> Result<Vec<TypeBArc>> {
    words.iter().filter(|w| w.iter().all(|&s| s < n)).map(|w| arc_of_word(n, w)).collect()
}

fn check_closed_form(theta: CongruenceB, pred: impl Fn(&TypeBArc) -> bool, what: &str) -> Result<CongruenceB> {
    let expected = CongruenceB::from_predicate(theta.n, pred);
    if theta != expected {
        return Err(Error::Invalid(format!("{what}: generated congruence differs from its closed form")));
    }
    Ok(theta)
}

/// The congruence generated by the simple reflections with indices in `j`
/// (`0` is `s0`).
pub fn parabolic_congruence(n: usize, j: &BTreeSet<usize>) -> Result<CongruenceB> {
    let gens: Vec<TypeBArc> = j.iter().map(|&i| arc_of_word(n, &[i])).collect::<Result<_>>()?;
    Ok(CongruenceB::from_generators(n, &gens))
}

/// Superarcs of the arc of `s_i`, read off directly.
pub fn parabolic_predicate(i: usize) -> impl Fn(&TypeBArc) -> bool {
    move |a: &TypeBArc| match *a {
        TypeBArc::Ordinary { bottom, top, .. } => i > 0 && bottom <= i && top > i,
        TypeBArc::Orbifold { top, .. } => top > i,
        TypeBArc::Long { left_ep, right_ep, .. } => i == 0 || left_ep > i || right_ep > i,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomVariant {
    Simion,
    Nonhom,
    Delta,
    DeltaMirror,
}

impl HomVariant {
    pub const ALL: [HomVariant; 4] = [HomVariant::Simion, HomVariant::Nonhom, HomVariant::Delta, HomVariant::DeltaMirror];

    pub fn words(self) -> &'static [&'static [usize]] {
        match self {
            HomVariant::Simion => &[&[0, 1], &[1, 0, 1]],
            HomVariant::Nonhom => &[&[0, 1, 0], &[1, 0], &[1, 0, 1, 2], &[2, 1, 0, 1, 2]],
            HomVariant::Delta => &[&[0, 1, 0], &[1, 0, 1]],
            HomVariant::DeltaMirror => &[&[0, 1], &[1, 0]],
        }
    }

    pub fn predicate(self, a: &TypeBArc) -> bool {
        match (self, *a) {
            (HomVariant::Simion, _) => a.is_long(),
            (HomVariant::Nonhom, _) => !a.is_ordinary() && a.endpoints().iter().all(|&e| e >= 2),
            (HomVariant::Delta, TypeBArc::Orbifold { .. }) => a.passes_right_of(1),
            (HomVariant::Delta, TypeBArc::Long { left_ep, .. }) => left_ep != 1,
            (HomVariant::DeltaMirror, TypeBArc::Orbifold { .. }) => a.passes_left_of(1),
            (HomVariant::DeltaMirror, TypeBArc::Long { right_ep, .. }) => right_ep != 1,
            _ => false,
        }
    }
}

impl FromStr for HomVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simion" => Ok(HomVariant::Simion),
            "nonhom" => Ok(HomVariant::Nonhom),
            "delta" => Ok(HomVariant::Delta),
            "delta_mirror" | "delta-mirror" => Ok(HomVariant::DeltaMirror),
            _ => Err(Error::Invalid(format!("unknown homomorphism variant {s:?}"))),
        }
    }
}

/// Congruence generated by the variant's join-irreducibles, checked against
/// its closed form. Words using `s2` are dropped when `n = 2`.
pub fn hom_congruence(n: usize, variant: HomVariant) -> Result<CongruenceB> {
    if n < 2 {
        return Err(Error::ScopeExceeded("homomorphism congruences need n >= 2".into()));
    }
    let gens = arcs_of_words(n, variant.words())?;
    check_closed_form(CongruenceB::from_generators(n, &gens), |a| variant.predicate(a), "hom congruence")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointSide {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl PointSide {
    fn flip(self) -> Self {
        match self {
            PointSide::Left => PointSide::Right,
            PointSide::Right => PointSide::Left,
        }
    }
}

/// A choice of side for each point `1..n-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<usize, PointSide>", into = "BTreeMap<usize, PointSide>")]
pub struct Designation {
    sides: Vec<PointSide>,
}

impl Designation {
    pub fn new(sides: Vec<PointSide>) -> Self {
        Designation { sides }
    }

    pub fn uniform(n: usize, side: PointSide) -> Self {
        Designation { sides: vec![side; n.saturating_sub(1)] }
    }

    /// Odd points get `odd`, even points the other side.
    pub fn bipartite(n: usize, odd: PointSide) -> Self {
        Designation { sides: (1..n).map(|i| if i % 2 == 1 { odd } else { odd.flip() }).collect() }
    }

    pub fn all(n: usize) -> Vec<Designation> {
        let m = n.saturating_sub(1);
        (0..1u32 << m)
            .map(|bits| Designation {
                sides: (0..m).map(|i| if bits >> i & 1 == 1 { PointSide::Left } else { PointSide::Right }).collect(),
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.sides.len() + 1
    }

    pub fn side(&self, i: usize) -> PointSide {
        self.sides[i - 1]
    }

    pub fn opposite(&self) -> Self {
        Designation { sides: self.sides.iter().map(|s| s.flip()).collect() }
    }

    pub fn points(&self, side: PointSide) -> PointSet {
        (1..self.n()).filter(|&i| self.side(i) == side).collect()
    }

    /// Does the arc pass right of a right point or left of a left point?
    pub fn violated_by(&self, a: &TypeBArc) -> bool {
        (1..self.n()).any(|i| match self.side(i) {
            PointSide::Right => a.passes_right_of(i),
            PointSide::Left => a.passes_left_of(i),
        })
    }
}

impl fmt::Display for Designation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sides {
            f.write_str(if *s == PointSide::Left { "L" } else { "R" })?;
        }
        Ok(())
    }
}

/// Parses a word such as `RLR` giving the sides of points `1, 2, 3`.
impl FromStr for Designation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'L' => Ok(PointSide::Left),
                'R' => Ok(PointSide::Right),
                _ => Err(Error::Invalid(format!("designation letter {c:?} is not L or R"))),
            })
            .collect::<Result<_>>()
            .map(Designation::new)
    }
}

impl TryFrom<BTreeMap<usize, PointSide>> for Designation {
    type Error = Error;

    fn try_from(m: BTreeMap<usize, PointSide>) -> Result<Self> {
        if m.keys().copied().ne(1..=m.len()) {
            return Err(Error::Invalid("designation must cover 1..n-1".into()));
        }
        Ok(Designation { sides: m.into_values().collect() })
    }
}

impl From<Designation> for BTreeMap<usize, PointSide> {
    fn from(d: Designation) -> Self {
        d.sides.into_iter().enumerate().map(|(i, s)| (i + 1, s)).collect()
    }
}

/// Join-irreducibles whose contraction defines the Cambrian congruence.
pub fn cambrian_generators(d: &Designation) -> Result<Vec<TypeBArc>> {
    let n = d.n();
    let mut words: Vec<Vec<usize>> = Vec::new();
    for i in 1..n {
        match (i, d.side(i)) {
            (1, PointSide::Right) => words.extend([vec![0, 1], vec![0, 1, 0]]),
            (1, PointSide::Left) => words.extend([vec![1, 0], vec![1, 0, 1]]),
            (i, PointSide::Right) => words.push(vec![i - 1, i]),
            (i, PointSide::Left) => words.push(vec![i, i - 1]),
        }
    }
    words.iter().map(|w| arc_of_word(n, w)).collect()
}

pub fn cambrian_congruence(d: &Designation) -> Result<CongruenceB> {
    let theta = CongruenceB::from_generators(d.n(), &cambrian_generators(d)?);
    check_closed_form(theta, |a| d.violated_by(a), "Cambrian congruence")
}

/// Long one-line notation avoids `bca` (`a < b < c`) with `b` a right point
/// or the negative of a left point.
pub fn cambrian_pattern_test(pi: &SignedPermutation, d: &Designation) -> bool {
    let w = pi.long_one_line();
    let marked = |b: i32| match b {
        b if b > 0 && (b as usize) < d.n() => d.side(b as usize) == PointSide::Right,
        b if b < 0 && ((-b) as usize) < d.n() => d.side((-b) as usize) == PointSide::Left,
        _ => false,
    };
    !has_pattern(&w, |x, y, z| z < x && x < y && marked(x))
}

/// The mirrored criterion: no `cab` with `b` a left point or the negative of
/// a right point.
pub fn cambrian_pattern_test_mirrored(pi: &SignedPermutation, d: &Designation) -> bool {
    let w = pi.long_one_line();
    let marked = |b: i32| match b {
        b if b > 0 && (b as usize) < d.n() => d.side(b as usize) == PointSide::Left,
        b if b < 0 && ((-b) as usize) < d.n() => d.side((-b) as usize) == PointSide::Right,
        _ => false,
    };
    !has_pattern(&w, |x, y, z| y < z && z < x && marked(z))
}

fn has_pattern(w: &[i32], pat: impl Fn(i32, i32, i32) -> bool) -> bool {
    let m = w.len();
    (0..m).any(|i| (i + 1..m).any(|j| (j + 1..m).any(|k| pat(w[i], w[j], w[k]))))
}

/// Arcs whose meet-irreducible congruences meet to the Cambrian congruence:
/// `β_o`, then `β_r` and `β_l` when there are right or left points.
pub fn cambrian_meet_rep(d: &Designation) -> Result<Vec<TypeBArc>> {
    let n = d.n();
    let (lefts, rights) = (d.points(PointSide::Left), d.points(PointSide::Right));
    let mut out = vec![TypeBArc::orbifold(n, rights)?];
    if let Some(r) = rights.iter().max() {
        out.push(TypeBArc::long(n, r, lefts, rights.intersection(PointSet::open(0, r)))?);
    }
    if let Some(l) = lefts.iter().max() {
        out.push(TypeBArc::long(l, n, lefts.intersection(PointSet::open(0, l)), rights)?);
    }
    Ok(out)
}

pub fn cambrian_meet(d: &Designation) -> Result<CongruenceB> {
    let n = d.n();
    Ok(cambrian_meet_rep(d)?
        .iter()
        .map(|b| CongruenceB::meet_irreducible(n, b))
        .reduce(|x, y| x.meet(&y))
        .expect("β_o always exists"))
}

/// Ordinary and orbifold arcs avoiding consecutive points on one side; long
/// arcs with nothing between the pieces and each piece doing the same.
pub fn is_alternating_arc(a: &TypeBArc) -> bool {
    let alternates = |len: usize, set: PointSet| (1..len.saturating_sub(1)).all(|i| set.contains(i) != set.contains(i + 1));
    match *a {
        TypeBArc::Ordinary { bottom, top, right } => (bottom + 1..top.saturating_sub(1)).all(|i| right.contains(i) != right.contains(i + 1)),
        TypeBArc::Orbifold { top, right } => alternates(top, right),
        TypeBArc::Long { left_ep, right_ep, left, right } => {
            a.between_set().is_empty() && alternates(left_ep, left) && alternates(right_ep, right)
        }
    }
}

/// Passes left of some point and right of another.
pub fn is_two_sided_arc(a: &TypeBArc) -> bool {
    let n = a.max_point();
    (1..n).any(|i| a.passes_left_of(i)) && (1..n).any(|i| a.passes_right_of(i))
}

pub fn bicambrian_bipartite(n: usize) -> Result<CongruenceB> {
    if n < 3 {
        return Err(Error::ScopeExceeded("biCambrian congruences need n >= 3".into()));
    }
    let mut words: Vec<Vec<usize>> = vec![vec![0, 1, 0, 2, 1, 0], vec![2, 1, 0], vec![0, 1, 2], vec![2, 1, 0, 1]];
    for i in 1..n - 2 {
        words.push(vec![i, i + 1, i + 2]);
        words.push(vec![i + 2, i + 1, i]);
    }
    let gens: Vec<TypeBArc> = words.iter().map(|w| arc_of_word(n, w)).collect::<Result<_>>()?;
    check_closed_form(CongruenceB::from_generators(n, &gens), |a| !is_alternating_arc(a), "bipartite biCambrian")
}

/// Generators for the linear biCambrian congruence as usually listed: arcs
/// with endpoints `i`, `i+3` and orbifold or long arcs at `3`, each passing
/// opposite sides of the two points in between.
pub fn linear_listed_generators(n: usize) -> Result<Vec<TypeBArc>> {
    if n < 3 {
        return Err(Error::ScopeExceeded("biCambrian congruences need n >= 3".into()));
    }
    let mut words: Vec<Vec<usize>> =
        vec![vec![0, 2, 1, 0], vec![1, 2, 0, 1, 0], vec![0, 2, 1], vec![1, 0, 1, 2, 1, 0, 1]];
    for i in 1..n - 2 {
        words.push(vec![i, i + 2, i + 1]);
        words.push(vec![i + 1, i, i + 2, i + 1]);
    }
    words.iter().map(|w| arc_of_word(n, w)).collect()
}

/// The listed generators miss the long arcs with endpoints `2` and `3` that
/// pass left of `1` with one piece and right of `2` with the other; these
/// are minimal among two-sided arcs too.
pub fn linear_generators(n: usize) -> Result<Vec<TypeBArc>> {
    let mut gens = linear_listed_generators(n)?;
    let (e, one) = (PointSet::EMPTY, PointSet::singleton(1));
    gens.extend([
        TypeBArc::long(2, 3, e, e)?,
        TypeBArc::long(2, 3, e, one)?,
        TypeBArc::long(3, 2, e, e)?,
        TypeBArc::long(3, 2, one, e)?,
    ]);
    Ok(gens)
}

pub fn bicambrian_linear(n: usize) -> Result<CongruenceB> {
    let gens = linear_generators(n)?;
    check_closed_form(CongruenceB::from_generators(n, &gens), is_two_sided_arc, "linear biCambrian")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum BlockKind {
    Plain,
    ContainsOrbifoldPoint,
    /// The pieces holding the left and the right endpoint of the long arc.
    WrapsBelow { left_piece: Vec<usize>, right_piece: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub points: Vec<usize>,
    #[serde(flatten)]
    pub kind: BlockKind,
}

/// Noncrossing partition of a disk with one orbifold point, stored
/// combinatorially. Blocks are sorted by their smallest point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NCPartitionB {
    pub n: usize,
    pub blocks: Vec<Block>,
}

impl NCPartitionB {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::MalformedPartition(m.into()));
        let mut seen = BTreeSet::new();
        for b in &self.blocks {
            if b.points.is_empty() {
                return bad("empty block");
            }
            for &p in &b.points {
                if p == 0 || p > self.n || !seen.insert(p) {
                    return bad("blocks do not partition 1..n");
                }
            }
            if let BlockKind::WrapsBelow { left_piece, right_piece } = &b.kind {
                let mut pieces: Vec<usize> = left_piece.iter().chain(right_piece).copied().collect();
                pieces.sort();
                let mut pts = b.points.clone();
                pts.sort();
                if left_piece.is_empty() || right_piece.is_empty() || pieces != pts {
                    return bad("pieces do not partition their block");
                }
            }
        }
        if seen.len() != self.n {
            return bad("blocks do not cover 1..n");
        }
        if self.blocks.iter().filter(|b| b.kind == BlockKind::ContainsOrbifoldPoint).count() > 1 {
            return bad("more than one block contains the orbifold point");
        }
        Ok(())
    }
}

/// The arc between two points (or a point and `×`, or a long arc) that never
/// passes left of a left point or right of a right point.
fn respecting_arc(d: &Designation, kind: Joint) -> Result<TypeBArc> {
    let rights = d.points(PointSide::Right);
    let lefts = d.points(PointSide::Left);
    match kind {
        Joint::Ordinary(a, b) => TypeBArc::ordinary(a.min(b), a.max(b), rights.intersection(PointSet::open(a.min(b), a.max(b)))),
        Joint::Orbifold(q) => TypeBArc::orbifold(q, rights.intersection(PointSet::open(0, q))),
        Joint::Long(p, q) => {
            TypeBArc::long(p, q, lefts.intersection(PointSet::open(0, p)), rights.intersection(PointSet::open(0, q)))
        }
    }
}

enum Joint {
    Ordinary(usize, usize),
    Orbifold(usize),
    Long(usize, usize),
}

fn chain(points: &[usize]) -> impl Iterator<Item = Joint> + '_ {
    points.windows(2).map(|w| Joint::Ordinary(w[0], w[1]))
}

pub fn ncp_from_diagram(diagram: &DiagramB, d: &Designation) -> Result<NCPartitionB> {
    let n = diagram.n;
    if d.n() != n {
        return Err(Error::Invalid(format!("designation is for {} points, diagram for {n}", d.n())));
    }
    if let Some(a) = diagram.arcs.iter().find(|a| d.violated_by(a)) {
        return Err(Error::Invalid(format!("{a:?} is contracted by the Cambrian congruence")));
    }
    let edges = |skip: Option<&TypeBArc>| -> Vec<(usize, usize)> {
        diagram
            .arcs
            .iter()
            .filter(|a| Some(*a) != skip)
            .filter_map(|a| match a.endpoints().as_slice() {
                [x, y] => Some((*x, *y)),
                _ => None,
            })
            .collect()
    };
    let comps = components(n, &edges(None));
    let mut blocks = Vec::new();
    for points in comps {
        let inside: Vec<&TypeBArc> =
            diagram.arcs.iter().filter(|a| a.endpoints().iter().all(|e| points.contains(e))).collect();
        let orb = inside.iter().any(|a| a.is_orbifold());
        let long: Vec<&&TypeBArc> = inside.iter().filter(|a| a.is_long()).collect();
        let kind = match (orb, long.as_slice()) {
            (false, []) => BlockKind::Plain,
            (true, []) => BlockKind::ContainsOrbifoldPoint,
            (false, [l]) => {
                let TypeBArc::Long { left_ep, right_ep, .. } = ***l else { unreachable!() };
                let split = components(n, &edges(Some(l)));
                let piece = |e: usize| split.iter().find(|c| c.contains(&e)).cloned().unwrap_or_default();
                BlockKind::WrapsBelow { left_piece: piece(left_ep), right_piece: piece(right_ep) }
            }
            _ => return Err(Error::Invalid("a block meets the orbifold point more than once".into())),
        };
        blocks.push(Block { points, kind });
    }
    Ok(NCPartitionB { n, blocks })
}

pub fn diagram_from_ncp(p: &NCPartitionB, d: &Designation) -> Result<DiagramB> {
    p.validate()?;
    if d.n() != p.n {
        return Err(Error::MalformedPartition("designation and partition sizes differ".into()));
    }
    let mut joints = Vec::new();
    for b in &p.blocks {
        let mut pts = b.points.clone();
        pts.sort();
        match &b.kind {
            BlockKind::Plain => joints.extend(chain(&pts)),
            BlockKind::ContainsOrbifoldPoint => {
                joints.push(Joint::Orbifold(pts[0]));
                joints.extend(chain(&pts));
            }
            BlockKind::WrapsBelow { left_piece, right_piece } => {
                let (mut l, mut r) = (left_piece.clone(), right_piece.clone());
                l.sort();
                r.sort();
                joints.push(Joint::Long(l[0], r[0]));
                joints.extend(chain(&l).collect::<Vec<_>>());
                joints.extend(chain(&r).collect::<Vec<_>>());
            }
        }
    }
    let arcs: Vec<TypeBArc> = joints
        .into_iter()
        .map(|j| respecting_arc(d, j))
        .collect::<Result<_>>()
        .map_err(|e| Error::MalformedPartition(e.to_string()))?;
    DiagramB::new(p.n, arcs).map_err(|e| Error::MalformedPartition(e.to_string()))
}

fn components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..=n).collect();
    fn find(l: &mut [usize], x: usize) -> usize {
        if l[x] != x {
            let r = find(l, l[x]);
            l[x] = r;
        }
        l[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut label, a), find(&mut label, b));
        label[ra.max(rb)] = ra.min(rb);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for p in 1..=n {
        let r = find(&mut label, p);
        groups.entry(r).or_default().push(p);
    }
    groups.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs_b::{delta_b_orb, enumerate_arcs_b};
    use crate::weak::WeakOrder;

    fn pts(v: &[usize]) -> PointSet {
        v.iter().copied().collect()
    }

    fn quotient_size(theta: &CongruenceB) -> usize {
        theta.quotient_elements().len()
    }

    #[test]
    fn simple_reflection_arcs() {
        assert_eq!(arc_of_word(3, &[0]).unwrap(), TypeBArc::orbifold(1, PointSet::EMPTY).unwrap());
        for i in 1..3 {
            assert_eq!(arc_of_word(3, &[i]).unwrap(), TypeBArc::ordinary(i, i + 1, PointSet::EMPTY).unwrap());
        }
    }

    #[test]
    fn parabolic_matches_superarc_lists() {
        for n in 1..=4 {
            for i in 0..n {
                let theta = parabolic_congruence(n, &BTreeSet::from([i])).unwrap();
                assert_eq!(theta, CongruenceB::from_predicate(n, parabolic_predicate(i)), "n={n} s{i}");
                let expected = if i == 0 { (1..=n).product::<usize>() } else {
                    (1 << i) * (1..=i).product::<usize>() * (1..=n - i).product::<usize>()
                };
                assert_eq!(quotient_size(&theta), expected, "n={n} s{i}");
            }
            let all: BTreeSet<usize> = (0..n).collect();
            assert_eq!(parabolic_congruence(n, &all).unwrap(), CongruenceB::full(n));
        }
    }

    #[test]
    fn hom_generator_arcs_match_descriptions() {
        let n = 3;
        let e = PointSet::EMPTY;
        assert_eq!(arc_of_word(n, &[0, 1]).unwrap(), TypeBArc::long(1, 2, e, e).unwrap());
        assert_eq!(arc_of_word(n, &[0, 1, 0]).unwrap(), TypeBArc::orbifold(2, e).unwrap());
        assert_eq!(arc_of_word(n, &[1, 0]).unwrap(), TypeBArc::orbifold(2, pts(&[1])).unwrap());
        assert_eq!(arc_of_word(n, &[1, 0, 1]).unwrap(), TypeBArc::long(2, 1, e, e).unwrap());
        assert_eq!(arc_of_word(n, &[1, 0, 1, 2]).unwrap(), TypeBArc::long(2, 3, e, e).unwrap());
        assert_eq!(arc_of_word(n, &[2, 1, 0, 1, 2]).unwrap(), TypeBArc::long(3, 2, e, e).unwrap());
    }

    #[test]
    fn hom_congruences_match_closed_forms() {
        for n in 2..=4 {
            for v in HomVariant::ALL {
                hom_congruence(n, v).unwrap();
            }
        }
    }

    #[test]
    fn hom_congruences_on_the_octagon() {
        let pick = |w: &[usize]| arc_of_word(2, w).unwrap();
        let (a, b, c, d) = (pick(&[0, 1]), pick(&[0, 1, 0]), pick(&[1, 0]), pick(&[1, 0, 1]));
        for v in HomVariant::ALL {
            let t = hom_congruence(2, v).unwrap();
            assert!(t.contracts(&a) != t.contracts(&b), "{v:?}");
            assert!(t.contracts(&c) != t.contracts(&d), "{v:?}");
            assert_eq!(quotient_size(&t), 6, "{v:?}");
        }
    }

    #[test]
    fn hom_quotients_have_size_of_s4() {
        let w = WeakOrder::<SignedPermutation>::new(3).unwrap();
        let s4 = WeakOrder::<crate::weak::Permutation>::new(4).unwrap();
        for v in HomVariant::ALL {
            let l = hom_congruence(3, v).unwrap().quotient_lattice(&w).unwrap();
            assert_eq!(l.len(), 24, "{v:?}");
            assert!(l.check_axioms(None));
            assert!(l.is_isomorphic(s4.lattice()), "{v:?}");
        }
    }

    #[test]
    fn con_a_verdicts() {
        assert!(!hom_congruence(3, HomVariant::Simion).unwrap().is_in_con_a());
        assert!(hom_congruence(3, HomVariant::Nonhom).unwrap().is_in_con_a());
        assert!(!hom_congruence(3, HomVariant::Delta).unwrap().is_in_con_a());
        for d in Designation::all(3) {
            assert!(cambrian_congruence(&d).unwrap().is_in_con_a());
        }
    }

    #[test]
    fn cambrian_sizes() {
        for (n, size) in [(1, 2), (2, 6), (3, 20), (4, 70)] {
            for d in Designation::all(n) {
                assert_eq!(quotient_size(&cambrian_congruence(&d).unwrap()), size, "{d}");
            }
        }
    }

    #[test]
    fn cambrian_pattern_matches_diagrams() {
        for n in 1..=3 {
            let w = WeakOrder::<SignedPermutation>::new(n).unwrap();
            for d in Designation::all(n) {
                let q: BTreeSet<SignedPermutation> = cambrian_congruence(&d).unwrap().quotient_elements().into_iter().collect();
                for pi in w.elements() {
                    assert_eq!(cambrian_pattern_test(pi, &d), q.contains(pi), "{d} {pi}");
                    assert_eq!(cambrian_pattern_test_mirrored(pi, &d), q.contains(pi), "{d} {pi}");
                }
            }
        }
        assert!(cambrian_pattern_test(&SignedPermutation::new(vec![1, 2, 3, 4]).unwrap(), &Designation::uniform(4, PointSide::Left)));
    }

    #[test]
    fn tamari_meet_rep_has_two_arcs() {
        for side in [PointSide::Left, PointSide::Right] {
            assert_eq!(cambrian_meet_rep(&Designation::uniform(4, side)).unwrap().len(), 2);
        }
        let d: Designation = "RLRRL".parse().unwrap();
        let rep = cambrian_meet_rep(&d).unwrap();
        assert_eq!(rep.len(), 3);
        assert!(rep.iter().all(|a| !d.violated_by(a)));
        assert!(rep[1..].iter().all(|a| a.between_set().is_empty()));
    }

    #[test]
    fn cambrian_is_meet_of_its_representatives() {
        for n in 1..=4 {
            for d in Designation::all(n) {
                assert_eq!(cambrian_meet(&d).unwrap(), cambrian_congruence(&d).unwrap(), "{d}");
            }
        }
    }

    #[test]
    fn ncp_roundtrip() {
        for n in 1..=3 {
            for d in Designation::all(n) {
                let mut seen = BTreeSet::new();
                for pi in cambrian_congruence(&d).unwrap().quotient_elements() {
                    let diagram = delta_b_orb(&pi);
                    let p = ncp_from_diagram(&diagram, &d).unwrap();
                    p.validate().unwrap();
                    assert_eq!(diagram_from_ncp(&p, &d).unwrap(), diagram, "{d} {pi}");
                    assert!(seen.insert(serde_json::to_string(&p).unwrap()));
                }
            }
        }
        let empty = ncp_from_diagram(&DiagramB::empty(3), &"RL".parse().unwrap()).unwrap();
        assert!(empty.blocks.iter().all(|b| b.points.len() == 1 && b.kind == BlockKind::Plain));
    }

    #[test]
    fn malformed_partitions_are_rejected() {
        let d: Designation = "RR".parse().unwrap();
        let p = NCPartitionB { n: 3, blocks: vec![Block { points: vec![1, 2], kind: BlockKind::Plain }] };
        assert!(matches!(diagram_from_ncp(&p, &d), Err(Error::MalformedPartition(_))));
        let two_orb = NCPartitionB {
            n: 2,
            blocks: vec![
                Block { points: vec![1], kind: BlockKind::ContainsOrbifoldPoint },
                Block { points: vec![2], kind: BlockKind::ContainsOrbifoldPoint },
            ],
        };
        assert!(matches!(diagram_from_ncp(&two_orb, &"R".parse().unwrap()), Err(Error::MalformedPartition(_))));
    }

    #[test]
    fn alternating_arcs() {
        let e = PointSet::EMPTY;
        assert!(is_alternating_arc(&TypeBArc::ordinary(1, 3, pts(&[2])).unwrap()));
        assert!(!is_alternating_arc(&TypeBArc::ordinary(1, 4, pts(&[2, 3])).unwrap()));
        assert!(!is_alternating_arc(&TypeBArc::long(2, 3, e, e).unwrap()));
        for a in enumerate_arcs_b(4) {
            let short = match a {
                TypeBArc::Ordinary { bottom, top, .. } => top - bottom < 3,
                TypeBArc::Orbifold { top, .. } => top < 3,
                TypeBArc::Long { .. } => false,
            };
            assert!(!short || is_alternating_arc(&a));
        }
    }

    #[test]
    fn bicambrian_closed_forms() {
        for n in 3..=5 {
            bicambrian_bipartite(n).unwrap();
            bicambrian_linear(n).unwrap();
            let listed = CongruenceB::from_generators(n, &linear_listed_generators(n).unwrap());
            let missing: Vec<TypeBArc> =
                bicambrian_linear(n).unwrap().contracted.difference(&listed.contracted).copied().collect();
            assert!(missing.iter().all(|a| a.is_long() && !a.endpoints().contains(&1)), "{missing:?}");
            assert!(missing.contains(&TypeBArc::long(2, 3, PointSet::EMPTY, PointSet::EMPTY).unwrap()));
        }
        assert!(matches!(bicambrian_linear(2), Err(Error::ScopeExceeded(_))));
    }

    #[test]
    fn bicambrian_is_meet_of_opposite_cambrians() {
        for n in 3..=4 {
            let bip = Designation::bipartite(n, PointSide::Right);
            let meet = cambrian_congruence(&bip).unwrap().meet(&cambrian_congruence(&bip.opposite()).unwrap());
            assert_eq!(bicambrian_bipartite(n).unwrap(), meet);
            let lin = Designation::uniform(n, PointSide::Right);
            let meet = cambrian_congruence(&lin).unwrap().meet(&cambrian_congruence(&lin.opposite()).unwrap());
            assert_eq!(bicambrian_linear(n).unwrap(), meet);
        }
    }

    #[test]
    fn designation_serde() {
        let d: Designation = "LRL".parse().unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"1":"L","2":"R","3":"L"}"#);
        assert_eq!(serde_json::from_str::<Designation>(&json).unwrap(), d);
        assert!(serde_json::from_str::<Designation>(r#"{"2":"L"}"#).is_err());
        assert_eq!(d.to_string(), "LRL");
    }
}
