//! Todd–Coxeter coset enumeration over presentations of quotients of
//! Δ = C₂*C₂*C₂ and Δ^0 = C₂*C₂*C₂*C₂.
//!
//! Every generator is an involution, so generators are their own inverses
//! and the generator-square relators are kept implicit: defining x·g = y
//! always installs y·g = x as well. The subgroup enumerated against is
//! trivial, so the resulting coset table is the regular permutation
//! representation of the quotient group. All of the paper-scale subgroups
//! are normal closures, which makes the table a group multiplication table,
//! but coincidence handling is implemented in full for arbitrary input.

use thiserror::Error;

use crate::hypermap::Hypermap;
use crate::word::{BWord, DeltaWord};

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("coset capacity {0} exceeded")]
    CapacityExceeded(usize),
}

/// A presentation of a quotient of the free product of `arity` copies of
/// C₂ by the normal closure of `relators` (letters are generator indices).
#[derive(Clone, Debug)]
pub struct Presentation {
    arity: usize,
    relators: Vec<Vec<usize>>,
    max_cosets: usize,
}

impl Presentation {
    /// A quotient of Δ (three generators).
    pub fn delta(relators: &[DeltaWord], max_cosets: usize) -> Presentation {
        let relators = relators
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.letters().iter().map(|&l| l as usize).collect())
            .collect();
        Presentation {
            arity: 3,
            relators,
            max_cosets,
        }
    }

    /// A quotient of Δ^0 (four generators a, b, c, d).
    pub fn b(relators: &[BWord], max_cosets: usize) -> Presentation {
        let relators = relators
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.letters().iter().map(|l| l.index()).collect())
            .collect();
        Presentation {
            arity: 4,
            relators,
            max_cosets,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Runs HLT-style enumeration with coincidence processing. Returns the
    /// regular representation of the quotient group: one permutation of the
    /// cosets per generator, coset 0 the image of the subgroup, cosets
    /// numbered in discovery order.
    pub fn coset_enumerate(&self) -> Result<CosetTable, EnumerationError> {
        let mut table = Table::new(self.arity, self.max_cosets);
        table.define_first()?;
        let mut coset = 0;
        while coset < table.len() {
            if !table.is_live(coset) {
                coset += 1;
                continue;
            }
            for r in &self.relators {
                table.scan_and_fill(coset, r)?;
                if !table.is_live(coset) {
                    break;
                }
            }
            if table.is_live(coset) {
                for g in 0..self.arity {
                    if table.entry(coset, g).is_none() {
                        table.define(coset, g)?;
                    }
                }
            }
            coset += 1;
        }
        Ok(table.compact())
    }
}

/// The completed coset table: `action[g][c]` is the coset c·g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub count: usize,
    pub action: Vec<Vec<usize>>,
}

struct Table {
    arity: usize,
    max: usize,
    rows: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    live: usize,
}

impl Table {
    fn new(arity: usize, max: usize) -> Table {
        Table {
            arity,
            max,
            rows: Vec::new(),
            parent: Vec::new(),
            live: 0,
        }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn define_first(&mut self) -> Result<(), EnumerationError> {
        self.new_coset()?;
        Ok(())
    }

    fn new_coset(&mut self) -> Result<usize, EnumerationError> {
        if self.live >= self.max {
            return Err(EnumerationError::CapacityExceeded(self.max));
        }
        let c = self.rows.len();
        self.rows.push(vec![None; self.arity]);
        self.parent.push(c);
        self.live += 1;
        Ok(c)
    }

    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn entry(&self, c: usize, g: usize) -> Option<usize> {
        self.rows[c][g]
    }

    /// Installs the deduction c·g = d (and d·g = c; generators are
    /// involutions). Conflicting prior entries become coincidences.
    fn deduce(&mut self, c: usize, g: usize, d: usize) {
        let mut pending = Vec::new();
        for (x, y) in [(c, d), (d, c)] {
            match self.rows[x][g] {
                None => self.rows[x][g] = Some(y),
                Some(z) => pending.push((y, z)),
            }
        }
        for (a, b) in pending {
            self.coincide(a, b);
        }
    }

    fn define(&mut self, c: usize, g: usize) -> Result<(), EnumerationError> {
        let fresh = self.new_coset()?;
        self.deduce(c, g, fresh);
        Ok(())
    }

    /// Merges two cosets and propagates all induced coincidences.
    fn coincide(&mut self, a: usize, b: usize) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let a = self.rep(a);
            let b = self.rep(b);
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop] = keep;
            self.live -= 1;
            for g in 0..self.arity {
                if let Some(d) = self.rows[drop][g].take() {
                    // the fact drop·g = d becomes keep·g = rep(d); stale
                    // back-edges into drop resolve to keep through rep()
                    let d = self.rep(d);
                    match self.rows[keep][g] {
                        None => {
                            self.rows[keep][g] = Some(d);
                            match self.rows[d][g] {
                                None => self.rows[d][g] = Some(keep),
                                Some(x) => {
                                    let x = self.rep(x);
                                    if x != keep {
                                        queue.push((x, keep));
                                    }
                                }
                            }
                        }
                        Some(e) => {
                            let e = self.rep(e);
                            if e != d {
                                queue.push((d, e));
                            }
                        }
                    }
                }
            }
        }
    }

    /// Scans relator `r` from coset `c`, filling the gap by defining new
    /// cosets (HLT) and closing it with a deduction.
    fn scan_and_fill(&mut self, c: usize, r: &[usize]) -> Result<(), EnumerationError> {
        loop {
            let c = self.rep(c);
            // forward scan
            let mut f = c;
            let mut i = 0;
            while i < r.len() {
                match self.rows[f][r[i]] {
                    Some(next) => {
                        f = self.rep(next);
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == r.len() {
                if f != c {
                    self.coincide(f, c);
                }
                return Ok(());
            }
            // backward scan (letters are self-inverse)
            let mut b = c;
            let mut j = r.len();
            while j > i + 1 {
                match self.rows[b][r[j - 1]] {
                    Some(next) => {
                        b = self.rep(next);
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i + 1 {
                // single gap: deduction closes the scan
                self.deduce(f, r[i], b);
                return Ok(());
            }
            // wider gap: define one coset and rescan
            self.define(f, r[i])?;
        }
    }

    /// Renumbers live cosets in discovery order and freezes the table.
    fn compact(mut self) -> CosetTable {
        let mut index = vec![usize::MAX; self.rows.len()];
        let mut count = 0;
        for c in 0..self.rows.len() {
            if self.is_live(c) {
                index[c] = count;
                count += 1;
            }
        }
        let mut action = vec![vec![0usize; count]; self.arity];
        for c in 0..self.rows.len() {
            if !self.is_live(c) {
                continue;
            }
            for g in 0..self.arity {
                let t = self.rows[c][g].expect("completed table has no holes");
                let t = self.rep(t);
                action[g][index[c]] = index[t];
            }
        }
        CosetTable { count, action }
    }
}

/// Builds the regular hypermap of the quotient Δ/⟨⟨relators⟩⟩: flags are
/// cosets and hᵢ is the action of Rᵢ.
pub fn regular_hypermap_from_delta_relators(
    relators: &[DeltaWord],
    max_cosets: usize,
) -> Result<Hypermap, EnumerationError> {
    let table = Presentation::delta(relators, max_cosets).coset_enumerate()?;
    let [h0, h1, h2]: [Vec<usize>; 3] = table.action.try_into().unwrap();
    Ok(Hypermap::new(table.count, h0, h1, h2).expect("coset table yields a valid hypermap"))
}

/// Builds the bipartite hypermap whose subgroup is the normal closure of
/// the Δ^0-relators. With Q the enumerated quotient of Δ^0, the coset
/// split Δ = Δ^0 ∪ Δ^0·R₀ realizes flags as Q × {0,1}:
/// h₀ swaps (q,0) ↔ (q,1), while R₁ and R₂ act on the R₀-translated part
/// through their R₀-conjugates, so h₁ acts by a on part 0 and by c on
/// part 1, and h₂ by b on part 0 and by d on part 1.
pub fn bipartite_hypermap_from_b_relators(
    relators: &[BWord],
    max_cosets: usize,
) -> Result<Hypermap, EnumerationError> {
    let table = Presentation::b(relators, max_cosets).coset_enumerate()?;
    let q = table.count;
    let n = 2 * q;
    // flag indexing: part 0 is 0..q, part 1 is q..2q
    let mut h0 = vec![0usize; n];
    let mut h1 = vec![0usize; n];
    let mut h2 = vec![0usize; n];
    for f in 0..q {
        h0[f] = q + f;
        h0[q + f] = f;
        h1[f] = table.action[0][f]; // a
        h1[q + f] = q + table.action[2][f]; // c
        h2[f] = table.action[1][f]; // b
        h2[q + f] = q + table.action[3][f]; // d
    }
    Ok(Hypermap::new(n, h0, h1, h2).expect("coset table yields a valid hypermap"))
}
