//! Hypermap-producing operators: σ-dual, orientable double cover, the
//! φ-construction, covering core and closure cover.

use std::collections::HashMap;

use thiserror::Error;

use crate::hypermap::Hypermap;
use crate::word::{BLetter, EpimorphismSpec, Sigma};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("monodromy group capacity {0} exceeded")]
    CapacityExceeded(usize),
    #[error("spec does not act transitively ({0} flags reachable); not an epimorphism for this input")]
    NotTransitive(usize),
}

/// The σ-dual: same flags, generator roles permuted. The hypermap subgroup
/// becomes Hσ̄, which corresponds to the action hᵢ' = h_{iσ⁻¹}: cells
/// transform contravariantly (for σ = (01) the dual's vertices are the
/// original's edges).
pub fn sigma_dual(h: &Hypermap, sigma: Sigma) -> Hypermap {
    let inv = sigma.inverse();
    let n = h.flag_count();
    let pick = |i: u8| h.generator(inv.apply(i) as usize).to_vec();
    Hypermap::new(n, pick(0), pick(1), pick(2)).expect("relabeling preserves validity")
}

/// The orientable double cover H⁺ (subgroup H ∩ Δ⁺). Orientable hypermaps
/// are their own double cover (up to isomorphism); otherwise the flags are
/// doubled, with each generator crossing between the two sheets.
pub fn double_cover(h: &Hypermap) -> Hypermap {
    if h.is_orientable() {
        return h.clone();
    }
    let n = h.flag_count();
    // flag (f, eps) is indexed f + eps*n
    let lift = |g: &[usize]| -> Vec<usize> {
        let mut out = vec![0usize; 2 * n];
        for f in 0..n {
            out[f] = g[f] + n;
            out[f + n] = g[f];
        }
        out
    };
    Hypermap::new(
        2 * n,
        lift(h.generator(0)),
        lift(h.generator(1)),
        lift(h.generator(2)),
    )
    .expect("double cover of a valid hypermap is valid")
}

/// The φ-construction: the bipartite hypermap with subgroup Hφ⁻¹.
///
/// Cosets of Hφ⁻¹ in Δ are realized concretely as Ω × {0,1} through the
/// coset split Δ = Δ^0 ∪ Δ^0·R₀: a flag (f, 0) stands for a Δ^0-coset and
/// (f, 1) for its R₀-translate. R₀ exchanges the two sheets with f fixed.
/// For R₁ and R₂ the identities g·R₀·R₁ = g·c·R₀ and g·R₀·R₂ = g·d·R₀
/// (c = R₁^{R₀}, d = R₂^{R₀}) move the action on sheet 1 back into Δ^0,
/// where φ evaluates it on Ω: sheet 0 uses the images of a and b, sheet 1
/// the images of c and d.
pub fn phi_construct(h: &Hypermap, phi: &EpimorphismSpec) -> Result<Hypermap, ConstructError> {
    let n = h.flag_count();
    let eval = |l: BLetter| h.evaluate(phi.image(l));
    let (pa, pb, pc, pd) = (
        eval(BLetter::A),
        eval(BLetter::B),
        eval(BLetter::C),
        eval(BLetter::D),
    );
    let mut h0 = vec![0usize; 2 * n];
    let mut h1 = vec![0usize; 2 * n];
    let mut h2 = vec![0usize; 2 * n];
    for f in 0..n {
        h0[f] = f + n;
        h0[f + n] = f;
        h1[f] = pa[f];
        h1[f + n] = pc[f] + n;
        h2[f] = pb[f];
        h2[f + n] = pd[f] + n;
    }
    Hypermap::new(2 * n, h0, h1, h2).map_err(|e| match e {
        crate::hypermap::HypermapError::NotTransitive(k) => ConstructError::NotTransitive(k),
        other => panic!("phi construction produced invalid data: {other}"),
    })
}

/// Enumerates the monodromy group of `h` as permutations, in BFS order
/// from the identity (right-multiplying by h₀, h₁, h₂ in order).
pub fn monodromy_elements(h: &Hypermap, cap: usize) -> Result<Vec<Vec<usize>>, ConstructError> {
    let n = h.flag_count();
    let identity: Vec<usize> = (0..n).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elems = vec![identity];
    let mut cursor = 0;
    while cursor < elems.len() {
        for g in 0..3 {
            let gen = h.generator(g);
            let prod: Vec<usize> = elems[cursor].iter().map(|&x| gen[x]).collect();
            if !index.contains_key(&prod) {
                if elems.len() >= cap {
                    return Err(ConstructError::CapacityExceeded(cap));
                }
                index.insert(prod.clone(), elems.len());
                elems.push(prod);
            }
        }
        cursor += 1;
    }
    Ok(elems)
}

/// The covering core H_Δ: the smallest regular hypermap covering `h`.
/// Its flags are the elements of Mon(h), acted on by right multiplication.
pub fn covering_core(h: &Hypermap, cap: usize) -> Result<Hypermap, ConstructError> {
    let elems = monodromy_elements(h, cap)?;
    let index: HashMap<&[usize], usize> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    let m = elems.len();
    let mut gens = [vec![0usize; m], vec![0usize; m], vec![0usize; m]];
    for (e, elem) in elems.iter().enumerate() {
        for g in 0..3 {
            let gen = h.generator(g);
            let prod: Vec<usize> = elem.iter().map(|&x| gen[x]).collect();
            gens[g][e] = index[prod.as_slice()];
        }
    }
    let [h0, h1, h2] = gens;
    Ok(Hypermap::new(m, h0, h1, h2).expect("regular representation is valid"))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns true when the merge changed anything.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let rx = self.find(x);
        let ry = self.find(y);
        if rx == ry {
            return false;
        }
        let (keep, drop) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[drop] = keep;
        true
    }
}

/// The closure cover H^Δ: the largest regular hypermap covered by `h`.
///
/// The stabilizer of flag 0 is generated by the Schreier generators of a
/// BFS spanning tree; the finest monodromy congruence collapsing them is
/// computed by seeding a union-find with (f, f·s) for every flag f and
/// Schreier generator s, then closing under x ~ y ⇒ x·hᵢ ~ y·hᵢ.
pub fn closure_cover(h: &Hypermap) -> Hypermap {
    let n = h.flag_count();
    // BFS spanning tree from flag 0; u[f] is a permutation sending 0 to f
    let identity: Vec<usize> = (0..n).collect();
    let mut u: Vec<Option<Vec<usize>>> = vec![None; n];
    u[0] = Some(identity);
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut order = vec![0usize];
    while let Some(f) = queue.pop_front() {
        for g in 0..3 {
            let t = h.generator(g)[f];
            if u[t].is_none() {
                let uf = u[f].as_ref().unwrap();
                let gen = h.generator(g);
                u[t] = Some(uf.iter().map(|&x| gen[x]).collect());
                queue.push_back(t);
                order.push(t);
            }
        }
    }
    let u: Vec<Vec<usize>> = u.into_iter().map(Option::unwrap).collect();
    let inv: Vec<Vec<usize>> = u
        .iter()
        .map(|p| {
            let mut q = vec![0usize; n];
            for (i, &v) in p.iter().enumerate() {
                q[v] = i;
            }
            q
        })
        .collect();

    let mut uf = UnionFind::new(n);
    for f in 0..n {
        for g in 0..3 {
            let gen = h.generator(g);
            let t = gen[f];
            // Schreier generator u_f · h_g · u_t⁻¹ fixes flag 0
            let s: Vec<usize> = (0..n).map(|x| inv[t][gen[u[f][x]]]).collect();
            debug_assert_eq!(s[0], 0);
            for x in 0..n {
                uf.union(x, s[x]);
            }
        }
    }
    // congruence closure: every flag must stay merged with its class root
    // after applying any generator
    loop {
        let mut changed = false;
        for x in 0..n {
            let r = uf.find(x);
            for g in 0..3 {
                let gen = h.generator(g);
                if uf.union(gen[x], gen[r]) {
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // classes numbered by first occurrence in flag order
    let mut class_index: HashMap<usize, usize> = HashMap::new();
    for f in 0..n {
        let r = uf.find(f);
        let next = class_index.len();
        class_index.entry(r).or_insert(next);
    }
    let m = class_index.len();
    let mut gens = [vec![0usize; m], vec![0usize; m], vec![0usize; m]];
    for f in 0..n {
        let c = class_index[&uf.find(f)];
        for g in 0..3 {
            gens[g][c] = class_index[&uf.find(h.generator(g)[f])];
        }
    }
    let [h0, h1, h2] = gens;
    Hypermap::new(m, h0, h1, h2).expect("congruence quotient is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::morphism::{find_covering, is_isomorphic, is_regular};
    use crate::word::DeltaWord;

    #[test]
    fn identity_dual_is_identity() {
        let k = families::k_klein();
        assert_eq!(sigma_dual(&k, Sigma::IDENTITY), k);
    }

    #[test]
    fn dual_01_swaps_vertices_and_edges() {
        let h = families::random_hypermap(8, 17, false).unwrap();
        let d = sigma_dual(&h, "01".parse().unwrap());
        assert_eq!(d.vertex_count(), h.edge_count());
        assert_eq!(d.edge_count(), h.vertex_count());
        assert_eq!(d.face_count(), h.face_count());
        assert_eq!(d.flag_count(), h.flag_count());
    }

    #[test]
    fn dual_composes() {
        let h = families::random_hypermap(6, 3, false).unwrap();
        let s: Sigma = "012".parse().unwrap();
        let t: Sigma = "01".parse().unwrap();
        assert_eq!(
            sigma_dual(&sigma_dual(&h, s), t),
            sigma_dual(&h, s.compose(t))
        );
    }

    #[test]
    fn double_cover_of_orientable_is_itself() {
        let t = families::t_torus();
        assert!(t.is_orientable());
        assert!(is_isomorphic(&double_cover(&t), &t));
    }

    #[test]
    fn double_cover_of_klein_is_torus() {
        let k = families::k_klein();
        let plus = double_cover(&k);
        assert_eq!(plus.flag_count(), 32);
        assert!(plus.is_orientable());
        assert!(is_isomorphic(&plus, &families::t_torus()));
        assert!(find_covering(&plus, &k).is_some());
    }

    #[test]
    fn double_cover_of_projective_plane_family() {
        for k in 1..=3 {
            let pp = families::pp2k(k);
            let plus = double_cover(&pp);
            assert_eq!(plus.flag_count(), 8 * k);
            assert!(plus.is_orientable());
            assert_eq!(plus.euler_characteristic(), Ok(2));
        }
    }

    #[test]
    fn phi_doubles_flags_and_is_bipartite() {
        let p2 = families::p2();
        for spec in crate::word::EpimorphismSpec::builtins() {
            let b = phi_construct(&p2, &spec).unwrap();
            assert_eq!(b.flag_count(), 2 * p2.flag_count());
            assert!(b.is_bipartite());
        }
    }

    #[test]
    fn phi1_of_p2_is_spherical_map() {
        let b = phi_construct(&families::p2(), &crate::word::EpimorphismSpec::phi(1)).unwrap();
        // a map: (h₂h₀)² is the identity
        let w: DeltaWord = "2020".parse().unwrap();
        assert_eq!(b.evaluate(&w), (0..b.flag_count()).collect::<Vec<_>>());
        assert_eq!(b.euler_characteristic(), Ok(2));
    }

    #[test]
    fn covering_core_of_regular_is_itself() {
        let t = families::t_torus();
        let core = covering_core(&t, 10_000).unwrap();
        assert!(is_isomorphic(&core, &t));
    }

    #[test]
    fn covering_core_of_klein_is_torus() {
        let k = families::k_klein();
        let core = covering_core(&k, 10_000).unwrap();
        assert!(is_regular(&core));
        assert!(is_isomorphic(&core, &families::t_torus()));
        assert!(find_covering(&core, &k).is_some());
    }

    #[test]
    fn covering_core_capacity() {
        let k = families::k_klein();
        assert_eq!(
            covering_core(&k, 4),
            Err(ConstructError::CapacityExceeded(4))
        );
    }

    #[test]
    fn closure_cover_of_regular_is_itself() {
        let t = families::t_torus();
        assert!(is_isomorphic(&closure_cover(&t), &t));
        let p2 = families::p2();
        assert!(is_isomorphic(&closure_cover(&p2), &p2));
    }

    #[test]
    fn closure_cover_is_regular_and_covered() {
        let h = families::random_hypermap(8, 5, false).unwrap();
        let cl = closure_cover(&h);
        assert!(is_regular(&cl));
        assert!(find_covering(&h, &cl).is_some());
    }
}
