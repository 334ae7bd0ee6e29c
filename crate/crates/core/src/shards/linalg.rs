//! Exact rational linear algebra: subspaces and Fourier–Motzkin elimination
//! for mixed strict and weak inequalities.

use std::collections::HashSet;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

pub type Q = Rational64;

pub fn q(v: i64) -> Q {
    Q::from_integer(v)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `coeffs · x + constant > 0` (or `>= 0` when not strict).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ineq {
    pub coeffs: Vec<Q>,
    pub constant: Q,
    pub strict: bool,
}

impl Ineq {
    pub fn homogeneous(coeffs: Vec<Q>, strict: bool) -> Self {
        Ineq { coeffs, constant: Q::zero(), strict }.normalized()
    }

    fn normalized(mut self) -> Self {
        let scale = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .copied()
            .unwrap_or(self.constant)
            .abs();
        if !scale.is_zero() {
            for c in &mut self.coeffs {
                *c /= scale;
            }
            self.constant /= scale;
        }
        self
    }

    fn holds(&self, x: &[Q]) -> bool {
        let v = dot(&self.coeffs, x) + self.constant;
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }
}

/// A point satisfying every inequality, or `None` if the system is infeasible.
pub fn solve(dim: usize, ineqs: &[Ineq]) -> Option<Vec<Q>> {
    let mut levels: Vec<Vec<Ineq>> = Vec::with_capacity(dim + 1);
    let mut current: Vec<Ineq> = dedup(ineqs.to_vec());
    for k in (0..dim).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in &current {
            let a = c.coeffs[k];
            if a.is_positive() {
                pos.push(c);
            } else if a.is_negative() {
                neg.push(c);
            } else {
                rest.push(c.clone());
            }
        }
        for p in &pos {
            for n in &neg {
                let (a, b) = (p.coeffs[k], -n.coeffs[k]);
                let coeffs: Vec<Q> = p.coeffs.iter().zip(&n.coeffs).map(|(x, y)| x * b + y * a).collect();
                let c = Ineq { coeffs, constant: p.constant * b + n.constant * a, strict: p.strict || n.strict };
                rest.push(c.normalized());
            }
        }
        levels.push(current);
        current = dedup(rest);
    }
    if current.iter().any(|c| !c.holds(&vec![Q::zero(); dim])) {
        return None;
    }
    levels.reverse();
    let mut x = vec![Q::zero(); dim];
    for (k, sys) in levels.iter().enumerate() {
        let mut lo: Option<(Q, bool)> = None;
        let mut hi: Option<(Q, bool)> = None;
        for c in sys {
            let a = c.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let rest: Q = c.coeffs.iter().zip(&x).take(k).map(|(u, v)| u * v).sum::<Q>() + c.constant;
            let bound = -rest / a;
            if a.is_positive() {
                if lo.is_none_or(|(v, s)| bound > v || (bound == v && c.strict && !s)) {
                    lo = Some((bound, c.strict));
                }
            } else if hi.is_none_or(|(v, s)| bound < v || (bound == v && c.strict && !s)) {
                hi = Some((bound, c.strict));
            }
        }
        x[k] = match (lo, hi) {
            (None, None) => Q::zero(),
            (Some((l, _)), None) => l.floor() + Q::one(),
            (None, Some((h, _))) => h.ceil() - Q::one(),
            (Some((l, _)), Some((h, _))) if l == h => l,
            (Some((l, _)), Some((h, _))) => pick_between(l, h),
        };
    }
    debug_assert!(ineqs.iter().all(|c| c.holds(&x)));
    Some(x)
}

/// A simple rational strictly between `l < h`.
fn pick_between(l: Q, h: Q) -> Q {
    let f = l.floor() + Q::one();
    if f < h {
        return f;
    }
    (l + h) / q(2)
}

fn dedup(v: Vec<Ineq>) -> Vec<Ineq> {
    let mut seen = HashSet::new();
    v.into_iter().filter(|c| seen.insert(c.clone())).collect()
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(rows: &mut [Vec<Q>], dim: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col];
        for v in rows[r].iter_mut() {
            *v /= lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col];
                let pivot_row = rows[r].clone();
                for (v, w) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= f * w;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(vectors: &[Vec<Q>]) -> usize {
    let Some(dim) = vectors.first().map(|v| v.len()) else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    rref(&mut rows, dim).len()
}

/// Basis of `{x : e · x = 0 for every e in equations}`.
pub fn null_space(equations: &[Vec<Q>], dim: usize) -> Vec<Vec<Q>> {
    let mut rows = equations.to_vec();
    let pivots = rref(&mut rows, dim);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); dim];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f];
            }
            v
        })
        .collect()
}

/// Restricts homogeneous constraints `a · x (>|>=) 0` to the span of `basis`,
/// dropping those vanishing there. Returns `None` if a strict one vanishes.
pub fn restrict(basis: &[Vec<Q>], constraints: &[(Vec<Q>, bool)]) -> Option<Vec<Ineq>> {
    let mut out = Vec::new();
    for (a, strict) in constraints {
        let coeffs: Vec<Q> = basis.iter().map(|b| dot(a, b)).collect();
        if coeffs.iter().all(|c| c.is_zero()) {
            if *strict {
                return None;
            }
            continue;
        }
        out.push(Ineq::homogeneous(coeffs, *strict));
    }
    Some(out)
}

/// A point of the subspace `span(basis)` satisfying the homogeneous
/// constraints, in ambient coordinates.
pub fn solve_in(basis: &[Vec<Q>], dim: usize, constraints: &[(Vec<Q>, bool)]) -> Option<Vec<Q>> {
    let ineqs = restrict(basis, constraints)?;
    let t = solve(basis.len(), &ineqs)?;
    let mut x = vec![Q::zero(); dim];
    for (ti, b) in t.iter().zip(basis) {
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi += ti * bi;
        }
    }
    Some(x)
}
