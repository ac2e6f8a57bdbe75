//! Property-based tests for the word algebra plus a finite-quotient check
//! that the recorded kernel relators of each built-in epimorphism generate
//! its kernel.

use proptest::prelude::*;

use hypermaps::presentation::Presentation;
use hypermaps::word::{BLetter, BWord, DeltaWord, EpimorphismSpec, ThetaClass};
use hypermaps::families;

fn letters() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 0..40)
}

proptest! {
    #[test]
    fn reduce_is_idempotent(raw in letters()) {
        let w = DeltaWord::new(&raw);
        prop_assert_eq!(DeltaWord::new(w.letters()), w);
    }

    #[test]
    fn reduce_never_lengthens(raw in letters()) {
        prop_assert!(DeltaWord::new(&raw).len() <= raw.len());
    }

    #[test]
    fn word_times_inverse_is_trivial(raw in letters()) {
        let w = DeltaWord::new(&raw);
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn theta_parity_is_additive(raw in letters(), raw2 in letters()) {
        let (u, v) = (DeltaWord::new(&raw), DeltaWord::new(&raw2));
        let uv = u.concat(&v);
        for t in ThetaClass::ALL {
            prop_assert_eq!(uv.theta_parity(t), u.theta_parity(t) ^ v.theta_parity(t));
        }
    }

    #[test]
    fn embedded_b_words_are_even(raw in prop::collection::vec(0usize..4, 0..20)) {
        let w = BWord::new(&raw.iter().map(|&i| BLetter::from_index(i)).collect::<Vec<_>>());
        prop_assert_eq!(w.embed().theta_parity(ThetaClass::Hat0), 0);
    }

    #[test]
    fn evaluation_ignores_reduction(raw in letters(), seed in 0u64..50) {
        let h = families::random_hypermap(6, seed, false).unwrap();
        let reduced = DeltaWord::new(&raw);
        for f in 0..h.flag_count() {
            let direct = raw.iter().fold(f, |x, &l| h.step(x, l as usize));
            prop_assert_eq!(h.act(f, &reduced), direct);
        }
    }
}

/// Independent check that each built-in's recorded kernel relators generate
/// the kernel: enumerating Δ^0 modulo (kernel relators + preimages of the
/// C₂³ relators under the image words) must give exactly |C₂³| = 8 cosets.
/// Too few cosets would mean the relators force extra collapse beyond the
/// kernel; too many would mean they fail to cover it.
#[test]
fn kernel_relators_match_finite_quotient() {
    for spec in EpimorphismSpec::builtins() {
        let mut relators: Vec<BWord> = spec.kernel_relators().to_vec();
        // preimages of the commuting relators (uv)^2 of C2^3: the images of
        // the generator pairs commute in the quotient, so (uv)^2 maps into
        // the pulled-back relation set
        for u in BLetter::ALL {
            for v in BLetter::ALL {
                let uv = BWord::generator(u).concat(&BWord::generator(v));
                relators.push(uv.concat(&uv));
            }
        }
        let table = Presentation::b(&relators, 10_000).coset_enumerate().unwrap();
        assert_eq!(table.count, 8, "{} kernel relators are wrong", spec.name());
    }
}
