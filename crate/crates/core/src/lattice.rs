//! Finite lattices given by their cover relations, and lattice congruences.
//!
//! Everything here works directly from the definitions: meets and joins come
//! from intersecting up-sets and down-sets, canonical join representations
//! are found by enumerating join representations, and congruences are built
//! by closing a set of identified pairs under joining and meeting with every
//! element. The arc-level machinery elsewhere in the crate is checked against
//! these routines.

use std::collections::{BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};

/// Largest lattice on which [`FiniteLattice::cjr_oracle`] will run.
pub const CJR_ORACLE_LIMIT: usize = 400;

/// An immutable finite lattice on elements `0..len()`.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    size: usize,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
}

/// A join-irreducible element together with the unique element it covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JoinIrreducible {
    pub j: usize,
    pub lower: usize,
}

/// A partition of the elements of a lattice, stored as the smallest element
/// index of each element's block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    rep: Vec<usize>,
}

impl Congruence {
    /// Build from arbitrary block labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut first = std::collections::HashMap::new();
        let rep = labels
            .iter()
            .enumerate()
            .map(|(i, l)| *first.entry(*l).or_insert(i))
            .collect();
        Congruence { rep }
    }

    pub fn identity(size: usize) -> Self {
        Congruence { rep: (0..size).collect() }
    }

    pub fn full(size: usize) -> Self {
        Congruence { rep: vec![0; size] }
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.rep[x] == self.rep[y]
    }

    pub fn class_label(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.rep.len()];
        for (x, &r) in self.rep.iter().enumerate() {
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }

    pub fn class_count(&self) -> usize {
        self.rep.iter().enumerate().filter(|(i, r)| *i == **r).count()
    }
}

/// A quotient lattice realized on the bottom elements of congruence classes.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub lattice: FiniteLattice,
    /// `bottoms[k]` is the element of the original lattice represented by
    /// quotient element `k`.
    pub bottoms: Vec<usize>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl FiniteLattice {
    /// Build a lattice on `0..size` from order relations `(lower, upper)`.
    /// The relations need not be covers; the order is their transitive
    /// closure.
    pub fn from_covers(size: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if size == 0 {
            return Err(Error::Empty);
        }
        let mut succ = vec![Vec::new(); size];
        let mut indeg = vec![0usize; size];
        for &(a, b) in relations {
            if a >= size || b >= size {
                return Err(Error::Invalid(format!("relation ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Cyclic);
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(size);
        let mut queue: VecDeque<usize> = (0..size).filter(|&x| indeg[x] == 0).collect();
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != size {
            return Err(Error::Cyclic);
        }

        let mut up = vec![FixedBitSet::with_capacity(size); size];
        for &x in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(size);
            set.insert(x);
            for &y in &succ[x] {
                set.union_with(&up[y]);
            }
            up[x] = set;
        }
        let mut down = vec![FixedBitSet::with_capacity(size); size];
        for (x, ups) in up.iter().enumerate() {
            for y in ups.ones() {
                down[y].insert(x);
            }
        }

        let mut upper_covers = vec![Vec::new(); size];
        let mut lower_covers = vec![Vec::new(); size];
        for x in 0..size {
            let mut strict = up[x].clone();
            strict.set(x, false);
            let mut above = FixedBitSet::with_capacity(size);
            for z in strict.ones() {
                let mut s = up[z].clone();
                s.set(z, false);
                above.union_with(&s);
            }
            strict.difference_with(&above);
            for y in strict.ones() {
                upper_covers[x].push(y);
                lower_covers[y].push(x);
            }
        }

        let mut join = vec![0u32; size * size];
        let mut meet = vec![0u32; size * size];
        let up_count: Vec<usize> = up.iter().map(|s| s.count_ones(..)).collect();
        let down_count: Vec<usize> = down.iter().map(|s| s.count_ones(..)).collect();
        for x in 0..size {
            for y in x..size {
                let ub = &up[x] & &up[y];
                let c = ub.count_ones(..);
                let j = ub
                    .ones()
                    .find(|&z| up_count[z] == c)
                    .ok_or(Error::NotALattice(x, y, "join"))?;
                let lb = &down[x] & &down[y];
                let c = lb.count_ones(..);
                let m = lb
                    .ones()
                    .find(|&z| down_count[z] == c)
                    .ok_or(Error::NotALattice(x, y, "meet"))?;
                join[x * size + y] = j as u32;
                join[y * size + x] = j as u32;
                meet[x * size + y] = m as u32;
                meet[y * size + x] = m as u32;
            }
        }
        let bottom = (0..size).find(|&x| up_count[x] == size).ok_or(Error::Empty)?;
        let top = (0..size).find(|&x| down_count[x] == size).ok_or(Error::Empty)?;
        Ok(FiniteLattice { size, lower_covers, upper_covers, up, down, join, meet, bottom, top })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y] as usize
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y] as usize
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (0..self.size)
            .flat_map(|x| self.upper_covers[x].iter().map(move |&y| (x, y)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.lower_covers[x].len() == 1
    }

    pub fn join_irreducibles(&self) -> Vec<JoinIrreducible> {
        (0..self.size)
            .filter(|&x| self.is_join_irreducible(x))
            .map(|j| JoinIrreducible { j, lower: self.lower_covers[j][0] })
            .collect()
    }

    /// Checks the lattice axioms on every triple (or on every triple whose
    /// first element lies in `sample`).
    pub fn check_axioms(&self, sample: Option<&[usize]>) -> bool {
        let n = self.size;
        let firsts: Vec<usize> = match sample {
            Some(s) => s.to_vec(),
            None => (0..n).collect(),
        };
        for &x in &firsts {
            if self.join(x, x) != x || self.meet(x, x) != x {
                return false;
            }
            for y in 0..n {
                if self.join(x, y) != self.join(y, x) || self.meet(x, y) != self.meet(y, x) {
                    return false;
                }
                if self.join(x, self.meet(x, y)) != x || self.meet(x, self.join(x, y)) != x {
                    return false;
                }
                for z in 0..n {
                    if self.join(self.join(x, y), z) != self.join(x, self.join(y, z)) {
                        return false;
                    }
                    if self.meet(self.meet(x, y), z) != self.meet(x, self.meet(y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical join representation by exhaustive search over irredundant
    /// antichains of join-irreducibles below `x`. Returns `None` when no
    /// representation is ideal-minimal.
    pub fn cjr_oracle(&self, x: usize) -> Result<Option<Vec<usize>>> {
        if self.size > CJR_ORACLE_LIMIT {
            return Err(Error::ScopeExceeded(format!(
                "cjr oracle limited to {CJR_ORACLE_LIMIT} elements, lattice has {}",
                self.size
            )));
        }
        let cands: Vec<usize> = self.down[x].ones().filter(|&j| self.is_join_irreducible(j)).collect();
        let mut reps: Vec<(Vec<usize>, FixedBitSet)> = Vec::new();
        let mut chosen = Vec::new();
        self.antichain_search(x, &cands, 0, self.bottom, &mut chosen, &mut reps);
        for (rep, ideal) in &reps {
            if reps.iter().all(|(_, other)| ideal.is_subset(other)) {
                return Ok(Some(rep.clone()));
            }
        }
        Ok(None)
    }

    fn antichain_search(
        &self,
        x: usize,
        cands: &[usize],
        start: usize,
        current: usize,
        chosen: &mut Vec<usize>,
        reps: &mut Vec<(Vec<usize>, FixedBitSet)>,
    ) {
        if current == x && self.irredundant(chosen, x) {
            let mut ideal = FixedBitSet::with_capacity(self.size);
            for &c in chosen.iter() {
                ideal.union_with(&self.down[c]);
            }
            reps.push((chosen.clone(), ideal));
        }
        for i in start..cands.len() {
            let c = cands[i];
            if chosen.iter().any(|&d| self.leq(c, d) || self.leq(d, c)) {
                continue;
            }
            let next = self.join(current, c);
            if next == current {
                continue;
            }
            chosen.push(c);
            self.antichain_search(x, cands, i + 1, next, chosen, reps);
            chosen.pop();
        }
    }

    fn irredundant(&self, set: &[usize], x: usize) -> bool {
        (0..set.len()).all(|skip| {
            self.join_all(set.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v)) != x
        })
    }

    /// True iff the partition's blocks are intervals and the maps to block
    /// bottoms and block tops are order-preserving.
    pub fn is_congruence(&self, theta: &Congruence) -> bool {
        if theta.len() != self.size {
            return false;
        }
        let Some((bot, top)) = self.class_extremes(theta) else {
            return false;
        };
        for class in theta.classes() {
            let b = bot[class[0]];
            let t = top[class[0]];
            let mut interval = self.up[b].clone();
            interval.intersect_with(&self.down[t]);
            if interval.count_ones(..) != class.len() || class.iter().any(|&c| !interval.contains(c)) {
                return false;
            }
        }
        self.covers().iter().all(|&(x, y)| self.leq(bot[x], bot[y]) && self.leq(top[x], top[y]))
    }

    /// Direct check of compatibility with meets and joins.
    pub fn is_congruence_algebraic(&self, theta: &Congruence) -> bool {
        if theta.len() != self.size {
            return false;
        }
        for x in 0..self.size {
            let r = theta.class_label(x);
            if r == x {
                continue;
            }
            for y in 0..self.size {
                if !theta.same_class(self.join(x, y), self.join(r, y))
                    || !theta.same_class(self.meet(x, y), self.meet(r, y))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Per-element bottom and top of its class, if every class has both.
    pub fn class_extremes(&self, theta: &Congruence) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut bot = vec![usize::MAX; self.size];
        let mut top = vec![usize::MAX; self.size];
        for class in theta.classes() {
            let b = class.iter().copied().find(|&m| class.iter().all(|&c| self.leq(m, c)))?;
            let t = class.iter().copied().find(|&m| class.iter().all(|&c| self.leq(c, m)))?;
            for &c in &class {
                bot[c] = b;
                top[c] = t;
            }
        }
        Some((bot, top))
    }

    /// The smallest congruence identifying every given pair.
    ///
    /// Closure runs over a queue of merged pairs: whenever two classes are
    /// merged through `(a, b)`, the pairs `(a v z, b v z)` and
    /// `(a ^ z, b ^ z)` are merged for every `z`. The merged pairs form a
    /// spanning forest of the final classes, so compatibility on them gives
    /// compatibility on the whole partition.
    pub fn congruence_generated(&self, pairs: &[(usize, usize)]) -> Congruence {
        let mut uf = UnionFind::new(self.size);
        let mut queue = VecDeque::new();
        for &(a, b) in pairs {
            if uf.union(a, b) {
                queue.push_back((a, b));
            }
        }
        while let Some((a, b)) = queue.pop_front() {
            for z in 0..self.size {
                let (ja, jb) = (self.join(a, z), self.join(b, z));
                if uf.union(ja, jb) {
                    queue.push_back((ja, jb));
                }
                let (ma, mb) = (self.meet(a, z), self.meet(b, z));
                if uf.union(ma, mb) {
                    queue.push_back((ma, mb));
                }
            }
        }
        let labels: Vec<usize> = (0..self.size).map(|x| uf.find(x)).collect();
        Congruence::from_labels(&labels)
    }

    pub fn principal_congruence(&self, j: JoinIrreducible) -> Congruence {
        self.congruence_generated(&[(j.j, j.lower)])
    }

    /// Congruence generated by contracting each of the given join-irreducibles.
    pub fn congruence_contracting(&self, jis: &[JoinIrreducible]) -> Congruence {
        let pairs: Vec<_> = jis.iter().map(|j| (j.j, j.lower)).collect();
        self.congruence_generated(&pairs)
    }

    pub fn contracted_jis(&self, theta: &Congruence) -> Vec<JoinIrreducible> {
        self.join_irreducibles()
            .into_iter()
            .filter(|j| theta.same_class(j.j, j.lower))
            .collect()
    }

    pub fn forcing_oracle(&self, j1: JoinIrreducible, j2: JoinIrreducible) -> bool {
        self.principal_congruence(j1).same_class(j2.j, j2.lower)
    }

    /// Quotient realized on class bottoms, checked against the lattice of
    /// classes.
    pub fn quotient(&self, theta: &Congruence) -> Result<Quotient> {
        if !self.is_congruence(theta) {
            return Err(Error::Invalid("partition is not a congruence".into()));
        }
        let (bot, _) = self.class_extremes(theta).expect("congruence classes are intervals");
        let mut bottoms: Vec<usize> = (0..self.size).filter(|&x| bot[x] == x).collect();
        bottoms.sort_unstable();
        let pos = |x: usize| bottoms.binary_search(&x).expect("bottom element");
        let mut rel = Vec::new();
        for (x, y) in self.covers() {
            rel.push((pos(bot[x]), pos(bot[y])));
        }
        rel.retain(|(a, b)| a != b);
        rel.sort_unstable();
        rel.dedup();
        let lattice = FiniteLattice::from_covers(bottoms.len(), &rel)?;
        for a in 0..bottoms.len() {
            for b in 0..bottoms.len() {
                let via_classes = bot[self.join(bottoms[a], bottoms[b])];
                if bottoms[lattice.join(a, b)] != via_classes {
                    return Err(Error::Invalid("quotient order disagrees with class joins".into()));
                }
                let via_classes = bot[self.meet(bottoms[a], bottoms[b])];
                if bottoms[lattice.meet(a, b)] != via_classes {
                    return Err(Error::Invalid("quotient order disagrees with class meets".into()));
                }
            }
        }
        Ok(Quotient { lattice, bottoms })
    }

    /// Checks that contraction is detected by canonical joinands, and that
    /// uncontracted elements keep their canonical join representation in the
    /// quotient.
    pub fn cjr_quotient_check(&self, theta: &Congruence) -> Result<bool> {
        let q = self.quotient(theta)?;
        let (bot, _) = self.class_extremes(theta).expect("congruence");
        for (x, &b) in bot.iter().enumerate() {
            let cjr = self.cjr_oracle(x)?.ok_or_else(|| {
                Error::Invalid(format!("element {x} has no canonical join representation"))
            })?;
            let contracted = b != x;
            let joinand_contracted = cjr.iter().any(|&j| theta.same_class(j, self.lower_covers[j][0]));
            if contracted != joinand_contracted {
                return Ok(false);
            }
            if !contracted {
                let k = q.bottoms.binary_search(&x).expect("uncontracted element is a bottom");
                let Some(qcjr) = q.lattice.cjr_oracle(k)? else {
                    return Ok(false);
                };
                let mapped: BTreeSet<usize> = qcjr.iter().map(|&i| q.bottoms[i]).collect();
                if mapped != cjr.iter().copied().collect() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every congruence, found by closing the principal congruences under
    /// joins. Intended for lattices with a handful of join-irreducibles.
    pub fn all_congruences(&self) -> Vec<Congruence> {
        let jis = self.join_irreducibles();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let start = Congruence::identity(self.size);
        seen.insert(self.contracted_set(&start, &jis));
        queue.push_back(start);
        while let Some(theta) = queue.pop_front() {
            let contracted = self.contracted_set(&theta, &jis);
            for (k, j) in jis.iter().enumerate() {
                if contracted.contains(&k) {
                    continue;
                }
                let mut gens: Vec<JoinIrreducible> = contracted.iter().map(|&i| jis[i]).collect();
                gens.push(*j);
                let next = self.congruence_contracting(&gens);
                if seen.insert(self.contracted_set(&next, &jis)) {
                    queue.push_back(next);
                }
            }
            out.push(theta);
        }
        out
    }

    fn contracted_set(&self, theta: &Congruence, jis: &[JoinIrreducible]) -> Vec<usize> {
        jis.iter()
            .enumerate()
            .filter(|(_, j)| theta.same_class(j.j, j.lower))
            .map(|(k, _)| k)
            .collect()
    }

    /// Subposet induced on `elements`, as a lattice (if it is one).
    pub fn induced(&self, elements: &[usize]) -> Result<FiniteLattice> {
        let mut rel = Vec::new();
        for (a, &x) in elements.iter().enumerate() {
            for (b, &y) in elements.iter().enumerate() {
                if a != b && self.leq(x, y) {
                    rel.push((a, b));
                }
            }
        }
        FiniteLattice::from_covers(elements.len(), &rel)
    }

    pub fn hasse_graph(&self) -> DiGraph<(), ()> {
        let mut g = DiGraph::with_capacity(self.size, 0);
        for _ in 0..self.size {
            g.add_node(());
        }
        for (a, b) in self.covers() {
            g.add_edge((a as u32).into(), (b as u32).into(), ());
        }
        g
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.size == other.size
            && self.covers().len() == other.covers().len()
            && petgraph::algo::is_isomorphic(&self.hasse_graph(), &other.hasse_graph())
    }
}
