//! Coverings, isomorphism, automorphisms, regularity and Θ-regularity,
//! image-of-φ membership and the minimum-generator count of the Δ^0
//! quotient of a bipartite-regular hypermap.

use std::collections::HashMap;

use thiserror::Error;

use crate::construct::phi_construct;
use crate::hypermap::Hypermap;
use crate::word::{BLetter, BWord, DeltaWord, EpimorphismSpec, ThetaClass};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("hypermap is not bipartite")]
    NotBipartite,
    #[error("hypermap is not bipartite-regular")]
    NotBipartiteRegular,
    #[error("spec has no kernel relators; membership is not decidable here")]
    NoKernelRelators,
    #[error("quotient group order {0} exceeds the supported bound {1}")]
    GroupTooLarge(usize, usize),
}

/// A covering: a flag map equivariant for the three generator actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagMap {
    pub source_flags: usize,
    pub target_flags: usize,
    pub images: Vec<usize>,
}

/// Tries to extend `0 ↦ t` to a covering by propagating equivariance over
/// a BFS of the source; returns the image vector on success.
fn extend_base_image(g: &Hypermap, h: &Hypermap, t: usize) -> Option<Vec<usize>> {
    let n = g.flag_count();
    let mut images: Vec<Option<usize>> = vec![None; n];
    images[0] = Some(t);
    let mut stack = vec![0usize];
    while let Some(f) = stack.pop() {
        let m = images[f].unwrap();
        for i in 0..3 {
            let fg = g.generator(i)[f];
            let mh = h.generator(i)[m];
            match images[fg] {
                None => {
                    images[fg] = Some(mh);
                    stack.push(fg);
                }
                Some(x) if x != mh => return None,
                _ => {}
            }
        }
    }
    Some(images.into_iter().map(Option::unwrap).collect())
}

/// The lowest-base-image covering from `g` to `h`, if one exists.
/// Coverings between transitive actions are automatically surjective.
pub fn find_covering(g: &Hypermap, h: &Hypermap) -> Option<FlagMap> {
    (0..h.flag_count()).find_map(|t| {
        extend_base_image(g, h, t).map(|images| FlagMap {
            source_flags: g.flag_count(),
            target_flags: h.flag_count(),
            images,
        })
    })
}

/// Equal flag counts make any covering bijective.
pub fn is_isomorphic(g: &Hypermap, h: &Hypermap) -> bool {
    g.flag_count() == h.flag_count() && find_covering(g, h).is_some()
}

/// The base-flag images of all automorphisms. Automorphisms act freely, so
/// each is determined by the image of flag 0.
pub fn automorphism_base_images(h: &Hypermap) -> Vec<usize> {
    (0..h.flag_count())
        .filter(|&t| extend_base_image(h, h, t).is_some())
        .collect()
}

pub fn automorphism_count(h: &Hypermap) -> usize {
    automorphism_base_images(h).len()
}

pub fn automorphisms(h: &Hypermap) -> Vec<FlagMap> {
    (0..h.flag_count())
        .filter_map(|t| extend_base_image(h, h, t))
        .map(|images| FlagMap {
            source_flags: h.flag_count(),
            target_flags: h.flag_count(),
            images,
        })
        .collect()
}

pub fn is_regular(h: &Hypermap) -> bool {
    automorphism_count(h) == h.flag_count()
}

/// Θ-regularity: the hypermap must be Θ-conservative and its automorphism
/// group transitive on the Θ-orbit of flag 0 (equivalently H ⊴ Θ).
/// Returns false, not an error, for non-conservative input.
pub fn is_theta_regular(h: &Hypermap, t: ThetaClass) -> bool {
    let Some(color) = h.theta_coloring(t) else {
        return false;
    };
    (0..h.flag_count())
        .filter(|&f| color[f] == color[0])
        .all(|f| extend_base_image(h, h, f).is_some())
}

/// Bipartite-regular = Δ^0-regular.
pub fn is_bipartite_regular(h: &Hypermap) -> bool {
    is_theta_regular(h, ThetaClass::Hat0)
}

fn relator_permutations(
    b: &Hypermap,
    phi: &EpimorphismSpec,
) -> Result<Vec<Vec<usize>>, MorphismError> {
    if phi.kernel_relators().is_empty() {
        return Err(MorphismError::NoKernelRelators);
    }
    Ok(phi
        .kernel_relators()
        .iter()
        .map(|r| b.evaluate(&r.embed()))
        .collect())
}

/// Membership of a bipartite hypermap in im φ: ker φ ⊆ B or
/// (ker φ)^{R₀} ⊆ B, i.e. every kernel relator fixes one whole part
/// pointwise (the normal closure over Δ^0 then fixes that part too).
pub fn in_image_of(b: &Hypermap, phi: &EpimorphismSpec) -> Result<bool, MorphismError> {
    let (part_a, part_b) = b
        .bipartite_parts()
        .map_err(|_| MorphismError::NotBipartite)?;
    let perms = relator_permutations(b, phi)?;
    let fixes = |part: &[usize]| perms.iter().all(|p| part.iter().all(|&f| p[f] == f));
    Ok(fixes(&part_a) || fixes(&part_b))
}

/// Searches reduced Δ^0-words by length (then lexicographically) for a
/// preimage of the one-letter word Rᵢ under φ.
fn generator_preimage(phi: &EpimorphismSpec, i: u8, max_len: usize) -> Option<BWord> {
    let target = DeltaWord::generator(i);
    let mut layer = vec![BWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in BLetter::ALL {
                if w.letters().last() == Some(&l) {
                    continue;
                }
                let cand = w.concat(&BWord::generator(l));
                if phi.apply(&cand) == target {
                    return Some(cand);
                }
                next.push(cand);
            }
        }
        layer = next;
    }
    None
}

/// Recovers a hypermap `h` with φ(h) ≅ b when `b ∈ im φ`. The recovered
/// flags are the part of `b` fixed pointwise by ker φ; the Δ-action on
/// them is read off through φ-preimages of the generators. Returns `None`
/// when membership fails or the round trip does not verify.
pub fn recover_preimage(
    b: &Hypermap,
    phi: &EpimorphismSpec,
) -> Result<Option<Hypermap>, MorphismError> {
    let (part_a, part_b) = b
        .bipartite_parts()
        .map_err(|_| MorphismError::NotBipartite)?;
    let perms = relator_permutations(b, phi)?;
    let fixes = |part: &[usize]| perms.iter().all(|p| part.iter().all(|&f| p[f] == f));
    let part = if fixes(&part_a) {
        part_a
    } else if fixes(&part_b) {
        part_b
    } else {
        return Ok(None);
    };

    let Some(words) = (0..3)
        .map(|i| generator_preimage(phi, i, 6))
        .collect::<Option<Vec<BWord>>>()
    else {
        return Ok(None);
    };
    let index: HashMap<usize, usize> = part.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut gens = Vec::with_capacity(3);
    for w in &words {
        let perm = b.evaluate(&w.embed());
        // Δ^0-words preserve the parts
        let restricted: Option<Vec<usize>> = part
            .iter()
            .map(|&f| index.get(&perm[f]).copied())
            .collect();
        match restricted {
            Some(p) => gens.push(p),
            None => return Ok(None),
        }
    }
    let [h0, h1, h2]: [Vec<usize>; 3] = gens.try_into().unwrap();
    let Ok(h) = Hypermap::new(part.len(), h0, h1, h2) else {
        return Ok(None);
    };
    match phi_construct(&h, phi) {
        Ok(image) if is_isomorphic(&image, b) => Ok(Some(h)),
        _ => Ok(None),
    }
}

const MIN_GENERATOR_GROUP_BOUND: usize = 64;

/// Closure of a set of permutations under composition.
fn generated_subgroup_order(n: usize, gens: &[&Vec<usize>]) -> usize {
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    seen.insert(identity.clone(), 0);
    let mut elems = vec![identity];
    let mut cursor = 0;
    while cursor < elems.len() {
        for g in gens {
            let prod: Vec<usize> = elems[cursor].iter().map(|&x| g[x]).collect();
            if !seen.contains_key(&prod) {
                seen.insert(prod.clone(), elems.len());
                elems.push(prod);
            }
        }
        cursor += 1;
    }
    elems.len()
}

/// The minimum number of elements generating the quotient Δ^0/B, realized
/// as the regular action of the four generator images on part A of a
/// bipartite-regular hypermap. Exhaustive search over element subsets of
/// growing size; `b` must be bipartite-regular and the quotient of order
/// at most 64.
pub fn b_quotient_min_generators(b: &Hypermap) -> Result<usize, MorphismError> {
    if !is_bipartite_regular(b) {
        return Err(MorphismError::NotBipartiteRegular);
    }
    let (part, _) = b.bipartite_parts().expect("bipartite-regular is bipartite");
    let index: HashMap<usize, usize> = part.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let gens: Vec<Vec<usize>> = BLetter::ALL
        .iter()
        .map(|&l| {
            let perm = b.evaluate(&BWord::generator(l).embed());
            part.iter().map(|&f| index[&perm[f]]).collect()
        })
        .collect();
    let m = part.len();
    // regular action: |Q| = |A|
    if m > MIN_GENERATOR_GROUP_BOUND {
        return Err(MorphismError::GroupTooLarge(m, MIN_GENERATOR_GROUP_BOUND));
    }
    let gen_refs: Vec<&Vec<usize>> = gens.iter().collect();
    let order = generated_subgroup_order(m, &gen_refs);
    debug_assert_eq!(order, m, "bipartite-regular quotient acts regularly");

    // enumerate all elements of Q once
    let identity: Vec<usize> = (0..m).collect();
    let mut elems = vec![identity.clone()];
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    seen.insert(identity, 0);
    let mut cursor = 0;
    while cursor < elems.len() {
        for g in &gens {
            let prod: Vec<usize> = elems[cursor].iter().map(|&x| g[x]).collect();
            if !seen.contains_key(&prod) {
                seen.insert(prod.clone(), elems.len());
                elems.push(prod);
            }
        }
        cursor += 1;
    }

    for k in 1..=4usize {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let chosen: Vec<&Vec<usize>> = combo.iter().map(|&i| &elems[i]).collect();
            if generated_subgroup_order(m, &chosen) == m {
                return Ok(k);
            }
            if !next_combination(&mut combo, elems.len()) {
                break;
            }
        }
    }
    // the four generator images themselves always generate
    Ok(4)
}

/// Advances `combo` to the next k-subset of {0, …, n−1} in lexicographic
/// order; false when exhausted.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] != i + n - k {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{covering_core, double_cover};
    use crate::families;

    #[test]
    fn identity_covering() {
        let k = families::k_klein();
        let cov = find_covering(&k, &k).unwrap();
        assert_eq!(cov.images, (0..16).collect::<Vec<_>>());
    }

    #[test]
    fn torus_covers_klein_not_conversely() {
        let k = families::k_klein();
        let t = families::t_torus();
        assert!(find_covering(&t, &k).is_some());
        assert!(find_covering(&k, &t).is_none());
    }

    #[test]
    fn isomorphism_basics() {
        let k = families::k_klein();
        let t = families::t_torus();
        assert!(is_isomorphic(&k, &k));
        assert!(!is_isomorphic(&k, &t));
        assert!(is_isomorphic(&covering_core(&k, 10_000).unwrap(), &t));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&families::t_torus()), 32);
        assert_eq!(automorphism_count(&families::k_klein()), 8);
        assert_eq!(automorphism_count(&families::p2()), 8);
    }

    #[test]
    fn regularity_flags() {
        let k = families::k_klein();
        let t = families::t_torus();
        assert!(is_bipartite_regular(&k));
        assert!(!is_regular(&k));
        assert!(is_regular(&t));
        assert!(is_bipartite_regular(&t));
    }

    #[test]
    fn automorphism_count_divides_flags() {
        for seed in 0..5 {
            let h = families::random_hypermap(8, seed, false).unwrap();
            assert_eq!(h.flag_count() % automorphism_count(&h), 0);
        }
    }

    #[test]
    fn membership_of_constructed_hypermaps() {
        let p2 = families::p2();
        for spec in EpimorphismSpec::builtins() {
            let b = phi_construct(&p2, &spec).unwrap();
            assert_eq!(in_image_of(&b, &spec), Ok(true), "{}", spec.name());
        }
    }

    #[test]
    fn torus_and_klein_not_in_any_image() {
        let k = families::k_klein();
        let t = families::t_torus();
        for spec in EpimorphismSpec::builtins() {
            assert_eq!(in_image_of(&t, &spec), Ok(false), "T vs {}", spec.name());
            assert_eq!(in_image_of(&k, &spec), Ok(false), "K vs {}", spec.name());
        }
    }

    #[test]
    fn no_kernel_relators_is_an_error() {
        let spec = EpimorphismSpec::new(
            "custom",
            [
                "1".parse().unwrap(),
                "2".parse().unwrap(),
                "0".parse().unwrap(),
                "2".parse().unwrap(),
            ],
            vec![],
        )
        .unwrap();
        let b = phi_construct(&families::p2(), &spec).unwrap();
        assert_eq!(
            in_image_of(&b, &spec),
            Err(MorphismError::NoKernelRelators)
        );
    }

    #[test]
    fn preimage_round_trips() {
        let p2 = families::p2();
        let phi1 = EpimorphismSpec::phi(1);
        let b = phi_construct(&p2, &phi1).unwrap();
        let h = recover_preimage(&b, &phi1).unwrap().unwrap();
        assert!(is_isomorphic(&h, &p2));

        let pp2 = families::pp2k(1);
        let phi5 = EpimorphismSpec::phi(5);
        let b = phi_construct(&pp2, &phi5).unwrap();
        let h = recover_preimage(&b, &phi5).unwrap().unwrap();
        assert!(is_isomorphic(&h, &pp2));
    }

    #[test]
    fn preimage_absent_for_nonmembers() {
        let t = families::t_torus();
        assert_eq!(recover_preimage(&t, &EpimorphismSpec::phi(1)), Ok(None));
    }

    #[test]
    fn min_generators() {
        assert_eq!(b_quotient_min_generators(&families::t_torus()), Ok(4));
        assert_eq!(b_quotient_min_generators(&families::k_klein()), Ok(3));
        let b = phi_construct(&families::p2(), &EpimorphismSpec::phi(2)).unwrap();
        assert!(b_quotient_min_generators(&b).unwrap() <= 3);
    }

    #[test]
    fn min_generators_requires_bipartite_regular() {
        let pp2 = families::pp2k(1);
        assert!(!pp2.is_bipartite());
        assert_eq!(
            b_quotient_min_generators(&pp2),
            Err(MorphismError::NotBipartiteRegular)
        );
    }

    #[test]
    fn regular_implies_theta_regular_when_conservative() {
        let t = families::t_torus();
        for theta in ThetaClass::ALL {
            if t.theta_coloring(theta).is_some() {
                assert!(is_theta_regular(&t, theta));
            } else {
                assert!(!is_theta_regular(&t, theta));
            }
        }
    }

    #[test]
    fn membership_consistent_with_double_cover() {
        // built-ins: B and B⁺ are members together or not at all
        let pp2 = families::pp2k(1);
        for spec in EpimorphismSpec::builtins() {
            let b = phi_construct(&pp2, &spec).unwrap();
            let lhs = in_image_of(&b, &spec).unwrap();
            let rhs = in_image_of(&double_cover(&b), &spec).unwrap();
            assert_eq!(lhs, rhs, "{}", spec.name());
        }
    }
}
