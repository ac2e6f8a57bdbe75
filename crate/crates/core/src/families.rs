//! Canonical hypermap families and a seeded random-hypermap generator.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hypermap::Hypermap;
use crate::presentation::{bipartite_hypermap_from_b_relators, DEFAULT_MAX_COSETS};
use crate::word::{BLetter, BWord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter k must be at least 1")]
    BadParameter,
    #[error("no boundary-free hypermap on an odd number of flags")]
    Unsatisfiable,
}

/// The unique regular hypermap on the sphere of type (2,2,2): the Cayley
/// hypermap of C₂³ with hᵢ right multiplication by the i-th basis vector.
/// Its subgroup is the derived subgroup of Δ.
pub fn p2() -> Hypermap {
    let n = 8;
    let gen = |bit: usize| (0..n).map(|x| x ^ (1 << bit)).collect::<Vec<_>>();
    Hypermap::new(n, gen(0), gen(1), gen(2)).unwrap()
}

/// Elements of the dihedral group of order 4k as (rotation, reflection)
/// pairs r^j s^e, numbered lexicographically: index = 2j + e.
fn dihedral_index(j: usize, e: usize, two_k: usize) -> usize {
    2 * (j % two_k) + e
}

/// The regular hypermap on the projective plane of type (2,2,2k): the
/// Cayley hypermap of the dihedral group ⟨r, s | r^{2k}, s², (rs)²⟩ of
/// order 4k with h₀ = ·s, h₁ = ·rs, h₂ = ·r^k. It has k vertices,
/// k edges, 1 face, 4k flags, χ = 1.
pub fn pp2k(k: usize) -> Hypermap {
    assert!(k >= 1, "pp2k requires k >= 1");
    let two_k = 2 * k;
    let n = 4 * k;
    let mut h0 = vec![0usize; n];
    let mut h1 = vec![0usize; n];
    let mut h2 = vec![0usize; n];
    for j in 0..two_k {
        // r^j · s = r^j s ; r^j s · s = r^j
        h0[dihedral_index(j, 0, two_k)] = dihedral_index(j, 1, two_k);
        h0[dihedral_index(j, 1, two_k)] = dihedral_index(j, 0, two_k);
        // r^j · rs = r^{j+1} s ; r^j s · rs = r^{j-1}
        h1[dihedral_index(j, 0, two_k)] = dihedral_index(j + 1, 1, two_k);
        h1[dihedral_index(j, 1, two_k)] = dihedral_index(j + two_k - 1, 0, two_k);
        // r^j · r^k = r^{j+k} ; r^j s · r^k = r^{j-k} s = r^{j+k} s
        h2[dihedral_index(j, 0, two_k)] = dihedral_index(j + k, 0, two_k);
        h2[dihedral_index(j, 1, two_k)] = dihedral_index(j + k, 1, two_k);
    }
    Hypermap::new(n, h0, h1, h2).unwrap()
}

/// A regular hypermap on the sphere of type (2,2,2k): the Cayley hypermap
/// of (dihedral of order 4k) × C₂ with h₀ = ·(s,1), h₁ = ·(rs,1),
/// h₂ = ·(1,z). 8k flags, 2k vertices, 2k edges, 2 faces, χ = 2,
/// orientable. Elements (r^j s^e, z^c) numbered by (j, e, c).
pub fn sphere222k(k: usize) -> Hypermap {
    assert!(k >= 1, "sphere222k requires k >= 1");
    let two_k = 2 * k;
    let n = 8 * k;
    let idx = |j: usize, e: usize, c: usize| 2 * dihedral_index(j, e, two_k) + c;
    let mut h0 = vec![0usize; n];
    let mut h1 = vec![0usize; n];
    let mut h2 = vec![0usize; n];
    for j in 0..two_k {
        for c in 0..2 {
            h0[idx(j, 0, c)] = idx(j, 1, c);
            h0[idx(j, 1, c)] = idx(j, 0, c);
            h1[idx(j, 0, c)] = idx(j + 1, 1, c);
            h1[idx(j, 1, c)] = idx(j + two_k - 1, 0, c);
            for e in 0..2 {
                h2[idx(j, e, c)] = idx(j, e, 1 - c);
            }
        }
    }
    Hypermap::new(n, h0, h1, h2).unwrap()
}

/// The (uv)² relators over all pairs of distinct Δ^0 generators.
pub fn commuting_relators() -> Vec<BWord> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let u = BLetter::from_index(i);
            let v = BLetter::from_index(j);
            out.push(BWord::new(&[u, v, u, v]));
        }
    }
    out
}

/// The bipartite-regular hypermap on the Klein bottle with 16 flags,
/// uniform of type (2,4,4): subgroup generated (as a normal closure in
/// Δ^0) by all (uv)² together with R₂·R₂^{R₀}·R₁^{R₀} = bdc.
pub fn k_klein() -> Hypermap {
    let mut relators = commuting_relators();
    relators.push("bdc".parse().unwrap());
    bipartite_hypermap_from_b_relators(&relators, DEFAULT_MAX_COSETS).unwrap()
}

/// The orientable double cover of `k_klein`, on the torus with 32 flags:
/// subgroup the normal closure of all (uv)², with Δ^0-quotient C₂⁴.
pub fn t_torus() -> Hypermap {
    bipartite_hypermap_from_b_relators(&commuting_relators(), DEFAULT_MAX_COSETS).unwrap()
}

fn random_involution(
    n: usize,
    allow_boundary: bool,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    let mut flags: Vec<usize> = (0..n).collect();
    flags.shuffle(rng);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut i = 0;
    while i < n {
        let fix_one = allow_boundary && rng.gen_bool(0.25);
        if fix_one || i + 1 == n {
            // leave flags[i] fixed (only possible with boundary allowed)
            i += 1;
        } else {
            let (a, b) = (flags[i], flags[i + 1]);
            perm[a] = b;
            perm[b] = a;
            i += 2;
        }
    }
    perm
}

/// A deterministic pseudorandom hypermap: involutions sampled from the
/// seed, rejection-sampled until transitive. Without boundary the
/// involutions are fixed-point-free, which requires even n.
pub fn random_hypermap(
    n: usize,
    seed: u64,
    allow_boundary: bool,
) -> Result<Hypermap, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParameter);
    }
    if !allow_boundary && n % 2 != 0 {
        return Err(FamilyError::Unsatisfiable);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let h0 = random_involution(n, allow_boundary, &mut rng);
        let h1 = random_involution(n, allow_boundary, &mut rng);
        let h2 = random_involution(n, allow_boundary, &mut rng);
        if let Ok(h) = Hypermap::new(n, h0, h1, h2) {
            return Ok(h);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::{is_bipartite_regular, is_isomorphic, is_regular};
    use crate::presentation::regular_hypermap_from_delta_relators;
    use crate::word::DeltaWord;

    #[test]
    fn p2_invariants() {
        let h = p2();
        assert_eq!(h.flag_count(), 8);
        assert_eq!(h.uniform_type(), Ok(Some((2, 2, 2))));
        assert_eq!(h.euler_characteristic(), Ok(2));
        assert_eq!(h.genus(), Ok(0));
        assert!(h.is_orientable());
        // the derived subgroup lies in every index-2 subgroup, so P2 is
        // conservative in every class, bipartiteness included
        assert!(h.is_bipartite());
        assert!(is_regular(&h));
    }

    #[test]
    fn p2_matches_derived_subgroup_presentation() {
        let relators: Vec<DeltaWord> = ["1212", "2020", "0101"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let from_relators = regular_hypermap_from_delta_relators(&relators, 1000).unwrap();
        assert!(is_isomorphic(&p2(), &from_relators));
    }

    #[test]
    fn pp2k_invariants() {
        for k in 1..=5 {
            let h = pp2k(k);
            assert_eq!(h.flag_count(), 4 * k);
            assert_eq!(h.vertex_count(), k);
            assert_eq!(h.edge_count(), k);
            assert_eq!(h.face_count(), 1);
            assert_eq!(h.euler_characteristic(), Ok(1));
            assert!(!h.is_orientable());
            assert!(!h.has_boundary());
            assert_eq!(h.uniform_type(), Ok(Some((2, 2, 2 * k))));
            assert!(is_regular(&h));
        }
    }

    #[test]
    fn sphere222k_invariants() {
        for k in 1..=5 {
            let h = sphere222k(k);
            assert_eq!(h.flag_count(), 8 * k);
            assert_eq!(h.vertex_count(), 2 * k);
            assert_eq!(h.edge_count(), 2 * k);
            assert_eq!(h.face_count(), 2);
            assert_eq!(h.euler_characteristic(), Ok(2));
            assert!(h.is_orientable());
            assert_eq!(h.uniform_type(), Ok(Some((2, 2, 2 * k))));
            assert!(is_regular(&h));
        }
    }

    #[test]
    fn klein_and_torus_invariants() {
        let k = k_klein();
        assert_eq!(k.flag_count(), 16);
        assert_eq!(k.euler_characteristic(), Ok(0));
        assert!(!k.is_orientable());
        assert!(!k.has_boundary());
        assert_eq!(k.uniform_type(), Ok(Some((2, 4, 4))));
        assert!(is_bipartite_regular(&k));
        assert!(!is_regular(&k));

        let t = t_torus();
        assert_eq!(t.flag_count(), 32);
        assert_eq!(t.euler_characteristic(), Ok(0));
        assert!(t.is_orientable());
        assert_eq!(t.uniform_type(), Ok(Some((2, 4, 4))));
        assert!(is_regular(&t));
    }

    #[test]
    fn random_hypermap_properties() {
        for seed in 0..10 {
            let h = random_hypermap(8, seed, false).unwrap();
            assert!(!h.has_boundary());
            // reproducibility
            assert_eq!(h, random_hypermap(8, seed, false).unwrap());
        }
        assert_eq!(
            random_hypermap(7, 0, false),
            Err(FamilyError::Unsatisfiable)
        );
        // unique 2-flag boundary-free hypermap
        let h = random_hypermap(2, 123, false).unwrap();
        assert_eq!(h.flag_count(), 2);
        assert!(!h.has_boundary());
    }

    #[test]
    fn random_with_boundary() {
        let h = random_hypermap(5, 1, true).unwrap();
        assert_eq!(h.flag_count(), 5);
        assert!(h.has_boundary());
    }
}
