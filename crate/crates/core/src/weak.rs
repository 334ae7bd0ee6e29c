//! Permutations, signed permutations and their weak orders.
//!
//! Signed permutations are written in short one-line notation `π1 … πn` and
//! extended by `π(-i) = -π(i)`. When a signed permutation is "unfolded" to
//! the symmetric group on the `2n` labels `-n < … < -1 < 1 < … < n`, those
//! labels are identified with positions `1..=2n` in that order.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Largest rank for which weak-order lattices are built.
pub const MAX_RANK_A: usize = 6;
pub const MAX_RANK_B: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    pub family: Family,
    pub n: usize,
}

/// A reflection, canonicalized so that equal reflections compare equal.
///
/// `Transposition(a, b)` has `a < b`. `SignChange(i)` is `(i -i)`.
/// `PairSwap(a, b)` is `(a b)(-a -b)` with `0 < a < |b|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reflection {
    Transposition(usize, usize),
    SignChange(usize),
    PairSwap(i32, i32),
}

impl Reflection {
    pub fn transposition(a: usize, b: usize) -> Self {
        Reflection::Transposition(a.min(b), a.max(b))
    }

    /// The type-B reflection exchanging the values `a` and `b` (and `-a`,
    /// `-b`). Equal to a sign change when `b = -a`.
    pub fn signed(a: i32, b: i32) -> Self {
        if a == -b {
            return Reflection::SignChange(a.unsigned_abs() as usize);
        }
        let (x, y) = if a.abs() < b.abs() { (a, b) } else { (b, a) };
        if x > 0 {
            Reflection::PairSwap(x, y)
        } else {
            Reflection::PairSwap(-x, -y)
        }
    }

    /// Bit index inside an inversion mask of rank `n`.
    fn index(self, n: usize) -> usize {
        let tri = |x: usize, y: usize| (y - 1) * (y - 2) / 2 + (x - 1);
        match self {
            Reflection::Transposition(a, b) => tri(a, b),
            Reflection::SignChange(i) => i - 1,
            Reflection::PairSwap(x, y) if y > 0 => n + tri(x as usize, y as usize),
            Reflection::PairSwap(x, y) => n + n * (n - 1) / 2 + tri(x as usize, (-y) as usize),
        }
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reflection::Transposition(a, b) => write!(f, "({a} {b})"),
            Reflection::SignChange(i) => write!(f, "({i} -{i})"),
            Reflection::PairSwap(a, b) => write!(f, "({a} {b})({} {})", -a, -b),
        }
    }
}

/// Elements of a finite Coxeter group of type A or B with their weak order
/// combinatorics.
pub trait CoxeterElement: Clone + Eq + Hash + Ord + fmt::Debug + Send + Sync {
    const FAMILY: Family;
    fn rank(&self) -> usize;
    fn identity(n: usize) -> Self;
    fn all(n: usize) -> Vec<Self>;
    /// Left inversions, sorted.
    fn inversions(&self) -> Vec<Reflection>;
    /// Lower covers with their cover reflections.
    fn covers_down(&self) -> Vec<(Self, Reflection)>;

    fn inversion_mask(&self) -> u64 {
        let n = self.rank();
        self.inversions().iter().fold(0u64, |m, t| m | 1 << t.index(n))
    }

    fn length(&self) -> usize {
        self.inversions().len()
    }

    fn weak_leq(&self, other: &Self) -> bool {
        let (a, b) = (self.inversion_mask(), other.inversion_mask());
        a & !b == 0
    }

    fn cover_reflections(&self) -> Vec<Reflection> {
        let mut out: Vec<_> = self.covers_down().into_iter().map(|(_, t)| t).collect();
        out.sort_unstable();
        out
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        if n > 63 {
            return Err(Error::ScopeExceeded("permutations are limited to 63 letters".into()));
        }
        Ok(Permutation(one_line.into_iter().map(|v| v as u8).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    /// Position of the value `v`, 1-based.
    pub fn position_of(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x as usize == v).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    /// Descent positions `i` with `π(i) > π(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    pub fn longest(n: usize) -> Permutation {
        Permutation((1..=n as u8).rev().collect())
    }

    /// `w0 π w0`, whose one-line notation reverses and complements that of `π`.
    pub fn w0_conjugate(&self) -> Permutation {
        let n = self.n() as u8;
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }

    /// Product of simple transpositions `s_{i1} s_{i2} …`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Permutation> {
        let mut p: Vec<u8> = (1..=n as u8).collect();
        for &s in word {
            if s == 0 || s >= n {
                return Err(Error::Invalid(format!("s{s} is not a simple reflection of S{n}")));
            }
            p.swap(s - 1, s);
        }
        Ok(Permutation(p))
    }
}

impl TryFrom<Vec<i64>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        if v.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidPermutation(format!("{v:?}")));
        }
        Permutation::new(v.into_iter().map(|x| x as usize).collect())
    }
}

impl From<Permutation> for Vec<i64> {
    fn from(p: Permutation) -> Self {
        p.0.into_iter().map(i64::from).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl CoxeterElement for Permutation {
    const FAMILY: Family = Family::A;

    fn rank(&self) -> usize {
        self.n()
    }

    fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    fn inversions(&self) -> Vec<Reflection> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    out.push(Reflection::transposition(self.0[j] as usize, self.0[i] as usize));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn covers_down(&self) -> Vec<(Self, Reflection)> {
        self.descents()
            .into_iter()
            .map(|i| {
                let mut p = self.0.clone();
                p.swap(i - 1, i);
                (Permutation(p), Reflection::transposition(self.at(i), self.at(i + 1)))
            })
            .collect()
    }
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A signed permutation in short one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SignedPermutation(Vec<i8>);

impl SignedPermutation {
    pub fn new(short: Vec<i32>) -> Result<Self> {
        let n = short.len();
        if n > 31 {
            return Err(Error::ScopeExceeded("signed permutations are limited to rank 31".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &short {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!("{short:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation(short.into_iter().map(|v| v as i8).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `π(i)` for nonzero `i` with `|i| <= n`.
    pub fn at(&self, i: i32) -> i32 {
        if i > 0 {
            self.0[i as usize - 1] as i32
        } else {
            -(self.0[(-i) as usize - 1] as i32)
        }
    }

    pub fn short(&self) -> Vec<i32> {
        self.0.iter().map(|&v| v as i32).collect()
    }

    /// `π(-n) … π(-1) π(1) … π(n)`.
    pub fn long_one_line(&self) -> Vec<i32> {
        let n = self.n() as i32;
        (-n..=n).filter(|&i| i != 0).map(|i| self.at(i)).collect()
    }

    /// The long one-line word as a permutation of positions `1..=2n`.
    pub fn unfold(&self) -> Permutation {
        let n = self.n();
        Permutation(self.long_one_line().into_iter().map(|l| label_to_position(n, l) as u8).collect())
    }

    /// Inverse of [`SignedPermutation::unfold`].
    pub fn fold(sigma: &Permutation) -> Result<SignedPermutation> {
        let m = sigma.n();
        if !m.is_multiple_of(2) {
            return Err(Error::NotSymmetric);
        }
        for p in 1..=m {
            if sigma.at(m + 1 - p) != m + 1 - sigma.at(p) {
                return Err(Error::NotSymmetric);
            }
        }
        let n = m / 2;
        Ok(SignedPermutation((1..=n).map(|i| position_to_label(n, sigma.at(n + i)) as i8).collect()))
    }

    /// Product `s_{i1} s_{i2} …` of simple generators, where `s0` negates the
    /// first entry and `s_i` swaps entries `i` and `i+1`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<SignedPermutation> {
        let mut p: Vec<i8> = (1..=n as i8).collect();
        for &s in word {
            match s {
                0 => p[0] = -p[0],
                s if s < n => p.swap(s - 1, s),
                _ => return Err(Error::Invalid(format!("s{s} is not a simple reflection of B{n}"))),
            }
        }
        Ok(SignedPermutation(p))
    }

    pub fn longest(n: usize) -> SignedPermutation {
        SignedPermutation((1..=n as i8).map(|v| -v).collect())
    }

    /// Is `π` join-irreducible, read off the long one-line word: exactly one
    /// descent at `π(-1) > π(1)`, or exactly two descents placed
    /// symmetrically.
    pub fn is_join_irreducible_shape(&self) -> bool {
        let w = self.long_one_line();
        let descents: Vec<usize> = (0..w.len() - 1).filter(|&i| w[i] > w[i + 1]).collect();
        let mid = self.n() - 1;
        match descents.as_slice() {
            [d] => *d == mid,
            [a, b] => a + b == w.len() - 2 && *a != mid,
            _ => false,
        }
    }
}

/// Position in `1..=2n` of a nonzero label in `-n..=n`.
pub fn label_to_position(n: usize, label: i32) -> usize {
    if label > 0 {
        n + label as usize
    } else {
        (n as i32 + 1 + label) as usize
    }
}

/// Label in `-n..=n` of a position in `1..=2n`.
pub fn position_to_label(n: usize, pos: usize) -> i32 {
    if pos > n {
        (pos - n) as i32
    } else {
        pos as i32 - n as i32 - 1
    }
}

impl TryFrom<Vec<i64>> for SignedPermutation {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        if v.iter().any(|&x| x.abs() > 31) {
            return Err(Error::InvalidPermutation(format!("{v:?}")));
        }
        SignedPermutation::new(v.into_iter().map(|x| x as i32).collect())
    }
}

impl From<SignedPermutation> for Vec<i64> {
    fn from(p: SignedPermutation) -> Self {
        p.0.into_iter().map(i64::from).collect()
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            if v < 0 {
                write!(f, "({v})")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl CoxeterElement for SignedPermutation {
    const FAMILY: Family = Family::B;

    fn rank(&self) -> usize {
        self.n()
    }

    fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i8).collect())
    }

    fn all(n: usize) -> Vec<Self> {
        Permutation::all(n)
            .into_iter()
            .flat_map(|p| {
                (0u32..1 << n).map(move |signs| {
                    SignedPermutation(
                        p.0.iter()
                            .enumerate()
                            .map(|(i, &v)| if signs >> i & 1 == 1 { -(v as i8) } else { v as i8 })
                            .collect(),
                    )
                })
            })
            .collect()
    }

    fn inversions(&self) -> Vec<Reflection> {
        let w = self.long_one_line();
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.push(Reflection::signed(w[j], w[i]));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn covers_down(&self) -> Vec<(Self, Reflection)> {
        let mut out = Vec::new();
        if self.0[0] < 0 {
            let mut p = self.0.clone();
            p[0] = -p[0];
            out.push((SignedPermutation(p), Reflection::SignChange(self.0[0].unsigned_abs() as usize)));
        }
        for i in 1..self.n() {
            let (a, b) = (self.0[i - 1], self.0[i]);
            if a > b {
                let mut p = self.0.clone();
                p.swap(i - 1, i);
                out.push((SignedPermutation(p), Reflection::signed(b as i32, a as i32)));
            }
        }
        out
    }
}

/// A weak order with its elements indexed densely, its lattice, and
/// inversion masks.
#[derive(Clone, Debug)]
pub struct WeakOrder<E: CoxeterElement> {
    pub n: usize,
    elements: Vec<E>,
    index: HashMap<E, usize>,
    masks: Vec<u64>,
    lattice: FiniteLattice,
}

impl<E: CoxeterElement> WeakOrder<E> {
    pub fn new(n: usize) -> Result<Self> {
        let limit = match E::FAMILY {
            Family::A => MAX_RANK_A,
            Family::B => MAX_RANK_B,
        };
        if n == 0 || n > limit {
            return Err(Error::ScopeExceeded(format!(
                "weak order of type {:?} limited to ranks 1..={limit}",
                E::FAMILY
            )));
        }
        Self::build(n)
    }

    /// Unchecked size; used for the symmetric group on `2n` letters.
    pub(crate) fn build(n: usize) -> Result<Self> {
        let mut elements = E::all(n);
        elements.sort_by_key(|e| (e.length(), e.clone()));
        let index: HashMap<E, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let masks = elements.iter().map(|e| e.inversion_mask()).collect();
        let mut rel = Vec::new();
        for (i, e) in elements.iter().enumerate() {
            for (lower, _) in e.covers_down() {
                rel.push((index[&lower], i));
            }
        }
        let lattice = FiniteLattice::from_covers(elements.len(), &rel)?;
        Ok(WeakOrder { n, elements, index, masks, lattice })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> usize {
        self.index[e]
    }

    pub fn get_index(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn mask(&self, i: usize) -> u64 {
        self.masks[i]
    }

    /// Canonical joinands of `w`: for each cover reflection `t`, the unique
    /// minimal element below `w` having `t` as an inversion. The descent
    /// stays inside the set of elements inverting `t`; a local minimum there
    /// is the global one because that set has a unique minimal element.
    pub fn cjr_weak(&self, w: &E) -> Vec<E> {
        let mut out: Vec<E> = w
            .cover_reflections()
            .into_iter()
            .map(|t| {
                let bit = 1u64 << t.index(self.n);
                let mut v = w.clone();
                'descend: loop {
                    for (u, _) in v.covers_down() {
                        if self.masks[self.index[&u]] & bit != 0 {
                            v = u;
                            continue 'descend;
                        }
                    }
                    break v;
                }
            })
            .collect();
        out.sort();
        out
    }

    /// All minimal elements below `w` inverting `t`, by exhaustive search.
    /// Used to confirm uniqueness.
    pub fn minimal_inverting(&self, w: &E, t: Reflection) -> Vec<E> {
        let bit = 1u64 << t.index(self.n);
        let wi = self.index[w];
        let set: Vec<usize> = self
            .lattice
            .down_set(wi)
            .ones()
            .filter(|&v| self.masks[v] & bit != 0)
            .collect();
        set.iter()
            .filter(|&&v| !set.iter().any(|&u| u != v && self.lattice.leq(u, v)))
            .map(|&v| self.elements[v].clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn longest_element_inverts_everything() {
        let inv = p(&[3, 2, 1]).inversions();
        assert_eq!(
            inv,
            vec![
                Reflection::Transposition(1, 2),
                Reflection::Transposition(1, 3),
                Reflection::Transposition(2, 3)
            ]
        );
        assert!(Permutation::identity(3).inversions().is_empty());
    }

    #[test]
    fn sign_change_inversion() {
        assert_eq!(sp(&[-1, 2]).inversions(), vec![Reflection::SignChange(1)]);
    }

    #[test]
    fn inversions_are_length_decreasing_reflections() {
        // t is an inversion iff the element obtained by applying t to values
        // has fewer inversions.
        for w in SignedPermutation::all(3) {
            let len = w.length();
            let mut expected = Vec::new();
            for a in 1..=3i32 {
                let t = |v: i32| if v.abs() == a { -v } else { v };
                let tw = SignedPermutation::new(w.short().into_iter().map(t).collect()).unwrap();
                if tw.length() < len {
                    expected.push(Reflection::SignChange(a as usize));
                }
                for b in -3..=3i32 {
                    if b == 0 || b.abs() <= a {
                        continue;
                    }
                    let t = |v: i32| match v {
                        v if v == a => b,
                        v if v == b => a,
                        v if v == -a => -b,
                        v if v == -b => -a,
                        v => v,
                    };
                    let tw = SignedPermutation::new(w.short().into_iter().map(t).collect()).unwrap();
                    if tw.length() < len {
                        expected.push(Reflection::signed(a, b));
                    }
                }
            }
            expected.sort();
            assert_eq!(w.inversions(), expected, "{w}");
        }
    }

    #[test]
    fn weak_order_comparisons() {
        assert!(p(&[2, 1, 3]).weak_leq(&p(&[2, 3, 1])));
        assert!(!p(&[2, 1, 3]).weak_leq(&p(&[1, 3, 2])));
    }

    #[test]
    fn covers_of_signed() {
        let covers = sp(&[1, -2]).covers_down();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].0, sp(&[-2, 1]));
        assert!(Permutation::identity(4).covers_down().is_empty());
    }

    #[test]
    fn cover_reflections_lower_length() {
        for w in SignedPermutation::all(3) {
            for (u, t) in w.covers_down() {
                assert_eq!(u.length() + 1, w.length());
                assert!(w.inversions().contains(&t));
                assert!(!u.inversions().contains(&t));
            }
        }
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(WeakOrder::<Permutation>::new(3).unwrap().len(), 6);
        assert_eq!(WeakOrder::<SignedPermutation>::new(2).unwrap().len(), 8);
        assert_eq!(WeakOrder::<SignedPermutation>::new(3).unwrap().len(), 48);
        assert!(matches!(WeakOrder::<SignedPermutation>::new(5), Err(Error::ScopeExceeded(_))));
    }

    #[test]
    fn octagon_has_six_join_irreducibles() {
        let w = WeakOrder::<SignedPermutation>::new(2).unwrap();
        assert_eq!(w.lattice().join_irreducibles().len(), 6);
    }

    #[test]
    fn unfold_example() {
        let w = sp(&[-4, 3, 5, 2, -1]);
        assert_eq!(w.long_one_line(), vec![1, -2, -5, -3, 4, -4, 3, 5, 2, -1]);
        assert_eq!(SignedPermutation::fold(&w.unfold()).unwrap(), w);
        assert_eq!(sp(&[1, 2]).long_one_line(), vec![-2, -1, 1, 2]);
    }

    #[test]
    fn fold_rejects_asymmetric() {
        assert_eq!(SignedPermutation::fold(&p(&[2, 1, 3, 4])), Err(Error::NotSymmetric));
    }

    #[test]
    fn words() {
        assert_eq!(SignedPermutation::from_word(3, &[0, 1]).unwrap(), sp(&[2, -1, 3]));
        assert_eq!(SignedPermutation::from_word(3, &[1, 0, 1]).unwrap(), sp(&[1, -2, 3]));
        assert_eq!(SignedPermutation::from_word(3, &[0, 1, 0]).unwrap(), sp(&[-2, -1, 3]));
    }

    #[test]
    fn w0_conjugation_is_group_conjugation() {
        let w0 = Permutation::longest(7);
        let pi = p(&[6, 4, 3, 7, 1, 2, 5]);
        assert_eq!(pi.w0_conjugate(), w0.compose(&pi).compose(&w0));
        assert_eq!(pi.w0_conjugate(), p(&[3, 6, 7, 1, 5, 4, 2]));
        assert_eq!(w0.w0_conjugate(), w0);
    }

    #[test]
    fn cjr_descends_to_unique_minimum() {
        let w = WeakOrder::<SignedPermutation>::new(3).unwrap();
        for e in w.elements() {
            for t in e.cover_reflections() {
                assert_eq!(w.minimal_inverting(e, t).len(), 1);
            }
        }
    }

    #[test]
    fn join_irreducible_shape() {
        let w = WeakOrder::<SignedPermutation>::new(3).unwrap();
        for (i, e) in w.elements().iter().enumerate() {
            assert_eq!(e.is_join_irreducible_shape(), w.lattice().is_join_irreducible(i), "{e}");
        }
    }

    #[test]
    fn serde_roundtrip() {
        let w = sp(&[-2, 1, 3]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "[-2,1,3]");
        assert_eq!(serde_json::from_str::<SignedPermutation>(&s).unwrap(), w);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}
