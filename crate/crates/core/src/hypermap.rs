//! The hypermap value type and its single-hypermap invariants.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{DeltaWord, ThetaClass};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypermapError {
    #[error("flag count must be positive")]
    Empty,
    #[error("generator h{0} maps a flag out of range")]
    FlagOutOfRange(usize),
    #[error("generator h{0} is not an involution")]
    NotInvolution(usize),
    #[error("monodromy action is not transitive ({0} flags reachable from flag 0)")]
    NotTransitive(usize),
    #[error("hypermap has boundary")]
    BoundaryPresent,
    #[error("flag count {0} is odd; Euler characteristic is undefined")]
    OddFlagCount(usize),
    #[error("hypermap is not bipartite")]
    NotBipartite,
}

/// The kinds of cells, each the orbit partition of a dihedral pair of
/// generators: vertices ⟨h₁,h₂⟩, edges ⟨h₂,h₀⟩, faces ⟨h₀,h₁⟩.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Vertex,
    Edge,
    Face,
}

impl CellKind {
    pub const ALL: [CellKind; 3] = [CellKind::Vertex, CellKind::Edge, CellKind::Face];

    /// The pair of generator indices whose orbits are this cell kind.
    pub fn generators(self) -> (usize, usize) {
        match self {
            CellKind::Vertex => (1, 2),
            CellKind::Edge => (2, 0),
            CellKind::Face => (0, 1),
        }
    }
}

/// A finite hypermap: three involutions h₀, h₁, h₂ on the flag set
/// {0, …, n−1} generating a transitive group. Fixed points of generators
/// are allowed and encode boundary. Values are immutable once validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypermap {
    n: usize,
    gens: [Vec<usize>; 3],
}

impl Hypermap {
    /// Validates involutions and transitivity.
    pub fn new(
        n: usize,
        h0: Vec<usize>,
        h1: Vec<usize>,
        h2: Vec<usize>,
    ) -> Result<Self, HypermapError> {
        if n == 0 {
            return Err(HypermapError::Empty);
        }
        let gens = [h0, h1, h2];
        for (i, g) in gens.iter().enumerate() {
            if g.len() != n || g.iter().any(|&f| f >= n) {
                return Err(HypermapError::FlagOutOfRange(i));
            }
            if (0..n).any(|f| g[g[f]] != f) {
                return Err(HypermapError::NotInvolution(i));
            }
        }
        let h = Hypermap { n, gens };
        let reached = h.reachable_from(0);
        if reached != n {
            return Err(HypermapError::NotTransitive(reached));
        }
        Ok(h)
    }

    fn reachable_from(&self, start: usize) -> usize {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(f) = stack.pop() {
            for g in &self.gens {
                let t = g[f];
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    stack.push(t);
                }
            }
        }
        count
    }

    pub fn flag_count(&self) -> usize {
        self.n
    }

    pub fn generator(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    /// The right action of a single generator.
    pub fn step(&self, flag: usize, i: usize) -> usize {
        self.gens[i][flag]
    }

    /// The right action of a word, composing letters left to right.
    pub fn act(&self, flag: usize, w: &DeltaWord) -> usize {
        w.letters()
            .iter()
            .fold(flag, |f, &l| self.gens[l as usize][f])
    }

    /// The permutation of all flags induced by a word.
    pub fn evaluate(&self, w: &DeltaWord) -> Vec<usize> {
        (0..self.n).map(|f| self.act(f, w)).collect()
    }

    /// Orbit partition of the dihedral pair for `kind`. Orbits are listed
    /// by smallest member and each orbit is sorted ascending.
    pub fn cells(&self, kind: CellKind) -> Vec<Vec<usize>> {
        let (i, j) = kind.generators();
        let mut seen = vec![false; self.n];
        let mut orbits = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(f) = stack.pop() {
                for g in [i, j] {
                    let t = self.gens[g][f];
                    if !seen[t] {
                        seen[t] = true;
                        orbit.push(t);
                        stack.push(t);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn cell_count(&self, kind: CellKind) -> usize {
        self.cells(kind).len()
    }

    pub fn vertex_count(&self) -> usize {
        self.cell_count(CellKind::Vertex)
    }

    pub fn edge_count(&self) -> usize {
        self.cell_count(CellKind::Edge)
    }

    pub fn face_count(&self) -> usize {
        self.cell_count(CellKind::Face)
    }

    /// χ = V + E + F − n/2; defined only for even flag counts.
    pub fn euler_characteristic(&self) -> Result<i64, HypermapError> {
        if self.n % 2 != 0 {
            return Err(HypermapError::OddFlagCount(self.n));
        }
        let cells = (self.vertex_count() + self.edge_count() + self.face_count()) as i64;
        Ok(cells - (self.n / 2) as i64)
    }

    /// A flag fixed by some generator is a boundary flag.
    pub fn has_boundary(&self) -> bool {
        self.gens
            .iter()
            .any(|g| (0..self.n).any(|f| g[f] == f))
    }

    /// Attempts the 2-coloring in which crossing hᵢ flips the color iff Rᵢ
    /// lies outside the subgroup named by `t`. A consistent coloring exists
    /// iff the hypermap is Θ-conservative; flag 0 gets color 0.
    pub fn theta_coloring(&self, t: ThetaClass) -> Option<Vec<u8>> {
        let parity = t.parity_vector();
        let mut color: Vec<Option<u8>> = vec![None; self.n];
        color[0] = Some(0);
        let mut stack = vec![0usize];
        while let Some(f) = stack.pop() {
            let cf = color[f].unwrap();
            for i in 0..3 {
                let g = self.gens[i][f];
                let cg = cf ^ parity[i];
                match color[g] {
                    None => {
                        color[g] = Some(cg);
                        stack.push(g);
                    }
                    Some(c) if c != cg => return None,
                    _ => {}
                }
            }
        }
        // re-scan every edge; BFS already checked them all, but the
        // consistency condition is exactly this edge condition
        let color: Vec<u8> = color.into_iter().map(Option::unwrap).collect();
        for f in 0..self.n {
            for i in 0..3 {
                if color[self.gens[i][f]] != color[f] ^ parity[i] {
                    return None;
                }
            }
        }
        Some(color)
    }

    pub fn is_orientable(&self) -> bool {
        self.theta_coloring(ThetaClass::Plus).is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        self.theta_coloring(ThetaClass::Hat0).is_some()
    }

    /// The two Δ^0-orbits of flags; part A contains flag 0.
    pub fn bipartite_parts(&self) -> Result<(Vec<usize>, Vec<usize>), HypermapError> {
        let color = self
            .theta_coloring(ThetaClass::Hat0)
            .ok_or(HypermapError::NotBipartite)?;
        let a = (0..self.n).filter(|&f| color[f] == 0).collect();
        let b = (0..self.n).filter(|&f| color[f] == 1).collect();
        Ok((a, b))
    }

    /// (2−χ)/2 for orientable hypermaps, 2−χ otherwise. Requires no boundary.
    pub fn genus(&self) -> Result<usize, HypermapError> {
        if self.has_boundary() {
            return Err(HypermapError::BoundaryPresent);
        }
        let chi = self.euler_characteristic()?;
        let g = if self.is_orientable() {
            debug_assert_eq!(chi % 2, 0);
            (2 - chi) / 2
        } else {
            2 - chi
        };
        Ok(g as usize)
    }

    /// (ℓ, m, n) if all vertices have valency ℓ, all edges m, all faces n.
    /// Valency of a boundary-free cell is half its flag count.
    pub fn uniform_type(&self) -> Result<Option<(usize, usize, usize)>, HypermapError> {
        if self.has_boundary() {
            return Err(HypermapError::BoundaryPresent);
        }
        let mut vals = [0usize; 3];
        for (k, kind) in CellKind::ALL.into_iter().enumerate() {
            let orbits = self.cells(kind);
            let v = orbits[0].len() / 2;
            if orbits.iter().any(|o| o.len() / 2 != v) {
                return Ok(None);
            }
            vals[k] = v;
        }
        Ok(Some((vals[0], vals[1], vals[2])))
    }

    /// The bipartite-type (ℓ₁, ℓ₂; m; n): part-A vertices all have valency
    /// ℓ₁, part-B vertices ℓ₂, edges m, faces n. Requires no boundary and
    /// bipartiteness; `None` when the valencies are not uniform per part.
    pub fn bipartite_type(&self) -> Result<Option<BipartiteType>, HypermapError> {
        if self.has_boundary() {
            return Err(HypermapError::BoundaryPresent);
        }
        let color = self
            .theta_coloring(ThetaClass::Hat0)
            .ok_or(HypermapError::NotBipartite)?;
        let mut ell = [None; 2];
        for orbit in self.cells(CellKind::Vertex) {
            // h₁, h₂ preserve the Δ^0-coloring, so vertices lie in one part
            let part = color[orbit[0]] as usize;
            debug_assert!(orbit.iter().all(|&f| color[f] as usize == part));
            let v = orbit.len() / 2;
            match ell[part] {
                None => ell[part] = Some(v),
                Some(e) if e != v => return Ok(None),
                _ => {}
            }
        }
        let mut mn = [0usize; 2];
        for (k, kind) in [CellKind::Edge, CellKind::Face].into_iter().enumerate() {
            let orbits = self.cells(kind);
            let v = orbits[0].len() / 2;
            if orbits.iter().any(|o| o.len() / 2 != v) {
                return Ok(None);
            }
            mn[k] = v;
        }
        // a single-vertex part cannot occur: h₀ maps part A onto part B,
        // but a part could still hold vertices of one valency only
        let (ell1, ell2) = match (ell[0], ell[1]) {
            (Some(a), Some(b)) => (a, b),
            _ => return Ok(None),
        };
        Ok(Some(BipartiteType {
            vertex_a: ell1,
            vertex_b: ell2,
            edge: mn[0],
            face: mn[1],
        }))
    }

    /// All invariant data for one hypermap.
    pub fn invariant_report(&self) -> InvariantReport {
        let has_boundary = self.has_boundary();
        let chi = self.euler_characteristic().ok();
        InvariantReport {
            flags: self.n,
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            faces: self.face_count(),
            chi,
            orientable: self.is_orientable(),
            has_boundary,
            bipartite: self.is_bipartite(),
            genus: self.genus().ok(),
            uniform_type: self.uniform_type().ok().flatten(),
            bipartite_type: self
                .bipartite_type()
                .ok()
                .flatten()
                .map(|t| (t.vertex_a, t.vertex_b, t.edge, t.face)),
        }
    }
}

/// Alternate vertex valencies (ℓ₁, ℓ₂), edge valency m, face valency n.
/// ℓ₁ is the valency of the part containing flag 0; the quadruple with the
/// two vertex valencies swapped names the same bipartite-type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteType {
    pub vertex_a: usize,
    pub vertex_b: usize,
    pub edge: usize,
    pub face: usize,
}

impl BipartiteType {
    /// Canonical representative with ℓ₁ ≤ ℓ₂, for comparisons.
    pub fn canonical(&self) -> (usize, usize, usize, usize) {
        let (a, b) = if self.vertex_a <= self.vertex_b {
            (self.vertex_a, self.vertex_b)
        } else {
            (self.vertex_b, self.vertex_a)
        };
        (a, b, self.edge, self.face)
    }
}

impl fmt::Display for BipartiteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{};{};{})",
            self.vertex_a, self.vertex_b, self.edge, self.face
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub flags: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: Option<i64>,
    pub orientable: bool,
    pub has_boundary: bool,
    pub bipartite: bool,
    pub genus: Option<usize>,
    pub uniform_type: Option<(usize, usize, usize)>,
    pub bipartite_type: Option<(usize, usize, usize, usize)>,
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "flags:          {}", self.flags)?;
        writeln!(f, "vertices:       {}", self.vertices)?;
        writeln!(f, "edges:          {}", self.edges)?;
        writeln!(f, "faces:          {}", self.faces)?;
        match self.chi {
            Some(chi) => writeln!(f, "chi:            {chi}")?,
            None => writeln!(f, "chi:            undefined (odd flag count)")?,
        }
        writeln!(f, "orientable:     {}", self.orientable)?;
        writeln!(f, "boundary:       {}", self.has_boundary)?;
        writeln!(f, "bipartite:      {}", self.bipartite)?;
        match self.genus {
            Some(g) => writeln!(f, "genus:          {g}")?,
            None => writeln!(f, "genus:          undefined")?,
        }
        match self.uniform_type {
            Some((l, m, n)) => writeln!(f, "uniform type:   ({l},{m},{n})")?,
            None => writeln!(f, "uniform type:   none")?,
        }
        match self.bipartite_type {
            Some((l1, l2, m, n)) => write!(f, "bipartite type: ({l1},{l2};{m};{n})"),
            None => write!(f, "bipartite type: none"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dw(s: &str) -> DeltaWord {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_one_flag_hypermap() {
        let h = Hypermap::new(1, vec![0], vec![0], vec![0]).unwrap();
        assert!(h.has_boundary());
        assert_eq!(h.genus(), Err(HypermapError::BoundaryPresent));
    }

    #[test]
    fn two_flag_swap() {
        let h = Hypermap::new(2, vec![1, 0], vec![1, 0], vec![1, 0]).unwrap();
        assert!(!h.has_boundary());
        assert_eq!(h.euler_characteristic(), Ok(2));
    }

    #[test]
    fn not_transitive() {
        assert_eq!(
            Hypermap::new(2, vec![0, 1], vec![0, 1], vec![0, 1]),
            Err(HypermapError::NotTransitive(1))
        );
    }

    #[test]
    fn not_involution() {
        assert_eq!(
            Hypermap::new(3, vec![1, 2, 0], vec![0, 1, 2], vec![0, 1, 2]),
            Err(HypermapError::NotInvolution(0))
        );
    }

    #[test]
    fn evaluate_reduced_word_matches_raw_action() {
        let h = Hypermap::new(2, vec![1, 0], vec![1, 0], vec![0, 1]).unwrap();
        assert_eq!(h.evaluate(&DeltaWord::empty()), vec![0, 1]);
        assert_eq!(h.evaluate(&dw("00")), vec![0, 1]);
        // unreduced action agrees with reduced form
        let raw = [0u8, 1, 1, 0, 2];
        let manual: Vec<usize> = (0..2)
            .map(|f| raw.iter().fold(f, |x, &l| h.generator(l as usize)[x]))
            .collect();
        assert_eq!(h.evaluate(&DeltaWord::new(&raw)), manual);
    }

    #[test]
    fn odd_flag_count_chi_undefined() {
        let h = Hypermap::new(1, vec![0], vec![0], vec![0]).unwrap();
        assert_eq!(h.euler_characteristic(), Err(HypermapError::OddFlagCount(1)));
    }

    #[test]
    fn bipartite_parts_on_non_bipartite_errors() {
        // 2 flags, every generator swaps: crossing h1 would flip the Δ^0
        // color of flag 0 to itself along a cycle of odd parity
        let h = Hypermap::new(2, vec![1, 0], vec![1, 0], vec![1, 0]).unwrap();
        assert!(!h.is_bipartite());
        assert_eq!(h.bipartite_parts(), Err(HypermapError::NotBipartite));
    }
}
