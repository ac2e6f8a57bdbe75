//! Words in the free products Δ = C₂*C₂*C₂ and Δ^0 = C₂*C₂*C₂*C₂.
//!
//! Δ is generated by three involutions R₀, R₁, R₂, written as the letters
//! 0, 1, 2. Δ^0 (the even-R₀ subgroup ⟨R₁, R₂⟩^Δ) is free on the four
//! involutions a = R₁, b = R₂, c = R₁^{R₀}, d = R₂^{R₀}, written a..d.
//! All words are kept in reduced form: since every generator is its own
//! inverse, reduction is just cancellation of equal adjacent letters.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Cancels equal adjacent letters until none remain.
fn reduce_letters<T: Copy + Eq>(letters: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("invalid letter {0:?} in word")]
    InvalidLetter(char),
}

/// A reduced word in the generators R₀, R₁, R₂ of Δ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DeltaWord(Vec<u8>);

impl DeltaWord {
    pub fn empty() -> Self {
        DeltaWord(Vec::new())
    }

    /// The one-letter word Rᵢ.
    pub fn generator(i: u8) -> Self {
        assert!(i < 3, "Δ has generators 0, 1, 2");
        DeltaWord(vec![i])
    }

    /// Builds a word from raw letters, reducing. Letters must be in {0,1,2}.
    pub fn new(letters: &[u8]) -> Self {
        assert!(letters.iter().all(|&l| l < 3), "Δ letters are 0, 1, 2");
        DeltaWord(reduce_letters(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &DeltaWord) -> DeltaWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        DeltaWord(reduce_letters(&letters))
    }

    /// The inverse word. Every letter is an involution, so w⁻¹ = reverse(w).
    pub fn inverse(&self) -> DeltaWord {
        DeltaWord(self.0.iter().rev().copied().collect())
    }

    /// A reduced word has order ≤ 2 in Δ exactly when it is a palindrome
    /// (w = w⁻¹); such words are the identity or conjugates of a generator.
    pub fn is_involution(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Membership parity for the index-2 subgroup named by `t`:
    /// 0 iff the word lies in the subgroup.
    pub fn theta_parity(&self, t: ThetaClass) -> u8 {
        let v = t.parity_vector();
        self.0.iter().fold(0u8, |acc, &l| acc ^ v[l as usize])
    }

    /// Relabels each letter i ↦ iσ.
    pub fn apply_sigma(&self, sigma: Sigma) -> DeltaWord {
        let letters: Vec<u8> = self.0.iter().map(|&l| sigma.apply(l)).collect();
        DeltaWord(reduce_letters(&letters))
    }
}

impl fmt::Display for DeltaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for &l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for DeltaWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "e" {
            return Ok(DeltaWord::empty());
        }
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => letters.push(0),
                '1' => letters.push(1),
                '2' => letters.push(2),
                _ => return Err(WordParseError::InvalidLetter(ch)),
            }
        }
        Ok(DeltaWord::new(&letters))
    }
}

/// Generators of Δ^0: a = R₁, b = R₂, c = R₁^{R₀}, d = R₂^{R₀}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BLetter {
    A,
    B,
    C,
    D,
}

impl BLetter {
    pub const ALL: [BLetter; 4] = [BLetter::A, BLetter::B, BLetter::C, BLetter::D];

    pub fn index(self) -> usize {
        match self {
            BLetter::A => 0,
            BLetter::B => 1,
            BLetter::C => 2,
            BLetter::D => 3,
        }
    }

    pub fn from_index(i: usize) -> BLetter {
        BLetter::ALL[i]
    }

    fn as_char(self) -> char {
        match self {
            BLetter::A => 'a',
            BLetter::B => 'b',
            BLetter::C => 'c',
            BLetter::D => 'd',
        }
    }

    /// Embeds the generator into Δ.
    fn delta_letters(self) -> &'static [u8] {
        match self {
            BLetter::A => &[1],
            BLetter::B => &[2],
            BLetter::C => &[0, 1, 0],
            BLetter::D => &[0, 2, 0],
        }
    }
}

/// A reduced word in the generators a, b, c, d of Δ^0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BWord(Vec<BLetter>);

impl BWord {
    pub fn empty() -> Self {
        BWord(Vec::new())
    }

    pub fn generator(l: BLetter) -> Self {
        BWord(vec![l])
    }

    pub fn new(letters: &[BLetter]) -> Self {
        BWord(reduce_letters(letters))
    }

    pub fn letters(&self) -> &[BLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &BWord) -> BWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        BWord(reduce_letters(&letters))
    }

    pub fn inverse(&self) -> BWord {
        BWord(self.0.iter().rev().copied().collect())
    }

    /// The image of the word under the embedding Δ^0 ≤ Δ
    /// (a ↦ 1, b ↦ 2, c ↦ 010, d ↦ 020). The result always has an
    /// even count of the letter 0.
    pub fn embed(&self) -> DeltaWord {
        let mut letters = Vec::with_capacity(3 * self.0.len());
        for &l in &self.0 {
            letters.extend_from_slice(l.delta_letters());
        }
        DeltaWord::new(&letters)
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for &l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for BWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "e" {
            return Ok(BWord::empty());
        }
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                'a' => letters.push(BLetter::A),
                'b' => letters.push(BLetter::B),
                'c' => letters.push(BLetter::C),
                'd' => letters.push(BLetter::D),
                _ => return Err(WordParseError::InvalidLetter(ch)),
            }
        }
        Ok(BWord::new(&letters))
    }
}

/// The seven index-2 normal subgroups of Δ. Membership of a word in any of
/// them is a parity check: the subgroup is the kernel of the homomorphism
/// Δ → C₂ sending Rᵢ to the i-th bit of the parity vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaClass {
    /// Δ⁺, the even-word subgroup; Δ⁺-conservative = orientable.
    Plus,
    /// Δ^0 = ⟨R₁, R₂⟩^Δ; Δ^0-conservative = bipartite.
    Hat0,
    /// Δ^1 = ⟨R₂, R₀⟩^Δ.
    Hat1,
    /// Δ^2 = ⟨R₀, R₁⟩^Δ.
    Hat2,
    /// Δ⁰ = ⟨R₀, R₁R₂⟩^Δ.
    Sub0,
    /// Δ¹ = ⟨R₁, R₂R₀⟩^Δ.
    Sub1,
    /// Δ² = ⟨R₂, R₀R₁⟩^Δ.
    Sub2,
}

impl ThetaClass {
    pub const ALL: [ThetaClass; 7] = [
        ThetaClass::Plus,
        ThetaClass::Hat0,
        ThetaClass::Hat1,
        ThetaClass::Hat2,
        ThetaClass::Sub0,
        ThetaClass::Sub1,
        ThetaClass::Sub2,
    ];

    /// The nonzero vector in {0,1}³ defining the quotient map Δ → C₂.
    pub fn parity_vector(self) -> [u8; 3] {
        match self {
            ThetaClass::Plus => [1, 1, 1],
            ThetaClass::Hat0 => [1, 0, 0],
            ThetaClass::Hat1 => [0, 1, 0],
            ThetaClass::Hat2 => [0, 0, 1],
            ThetaClass::Sub0 => [0, 1, 1],
            ThetaClass::Sub1 => [1, 0, 1],
            ThetaClass::Sub2 => [1, 1, 0],
        }
    }

    /// Whether crossing generator Rᵢ leaves the subgroup's coset.
    pub fn letter_parity(self, i: u8) -> u8 {
        self.parity_vector()[i as usize]
    }
}

/// A permutation σ of {0,1,2}, acting on generator labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sigma([u8; 3]);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SigmaParseError {
    #[error("not a permutation of {{0,1,2}}: {0:?}")]
    NotAPermutation([u8; 3]),
    #[error("unknown permutation name {0:?} (expected id, 01, 02, 12, 012 or 021)")]
    UnknownName(String),
}

impl Sigma {
    pub const IDENTITY: Sigma = Sigma([0, 1, 2]);

    pub fn from_images(images: [u8; 3]) -> Result<Sigma, SigmaParseError> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i as usize] {
                return Err(SigmaParseError::NotAPermutation(images));
            }
            seen[i as usize] = true;
        }
        Ok(Sigma(images))
    }

    pub fn transposition(i: u8, j: u8) -> Sigma {
        assert!(i < 3 && j < 3 && i != j);
        let mut images = [0, 1, 2];
        images.swap(i as usize, j as usize);
        Sigma(images)
    }

    pub fn apply(self, i: u8) -> u8 {
        self.0[i as usize]
    }

    /// Composition: `self.compose(tau)` applies `self` first, then `tau`.
    pub fn compose(self, tau: Sigma) -> Sigma {
        Sigma([
            tau.apply(self.0[0]),
            tau.apply(self.0[1]),
            tau.apply(self.0[2]),
        ])
    }

    pub fn inverse(self) -> Sigma {
        let mut images = [0u8; 3];
        for i in 0..3 {
            images[self.0[i] as usize] = i as u8;
        }
        Sigma(images)
    }
}

impl FromStr for Sigma {
    type Err = SigmaParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "id" | "e" => Ok(Sigma::IDENTITY),
            "01" => Ok(Sigma::transposition(0, 1)),
            "02" => Ok(Sigma::transposition(0, 2)),
            "12" => Ok(Sigma::transposition(1, 2)),
            // cycle (0 1 2): 0→1, 1→2, 2→0
            "012" => Ok(Sigma([1, 2, 0])),
            // cycle (0 2 1): 0→2, 2→1, 1→0
            "021" => Ok(Sigma([2, 0, 1])),
            other => Err(SigmaParseError::UnknownName(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("image of generator {0:?} is not an involution in Δ")]
    ImageNotInvolution(char),
    #[error("kernel relator {0} does not map to the identity")]
    RelatorNotInKernel(String),
}

/// A homomorphism Δ^0 → Δ given by the images of a, b, c, d, together with
/// words normally generating its kernel (needed for image-membership tests).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpimorphismSpec {
    name: String,
    images: [DeltaWord; 4],
    kernel_relators: Vec<BWord>,
}

impl EpimorphismSpec {
    pub fn new(
        name: impl Into<String>,
        images: [DeltaWord; 4],
        kernel_relators: Vec<BWord>,
    ) -> Result<Self, SpecError> {
        for (w, l) in images.iter().zip(BLetter::ALL) {
            if !w.is_involution() {
                return Err(SpecError::ImageNotInvolution(l.as_char()));
            }
        }
        let spec = EpimorphismSpec {
            name: name.into(),
            images,
            kernel_relators: Vec::new(),
        };
        for r in &kernel_relators {
            if !spec.apply(r).is_empty() {
                return Err(SpecError::RelatorNotInKernel(r.to_string()));
            }
        }
        Ok(EpimorphismSpec {
            kernel_relators,
            ..spec
        })
    }

    /// The five built-in epimorphisms. φ₁ is Walsh's bipartite-map
    /// correspondence. Images of (a, b, c, d):
    /// φ₁ = (1,2,0,2), φ₂ = (1,2,0,0), φ₃ = (1,2,2,0), φ₄ = (1,2,0,1),
    /// φ₅ = (1,2,010,0).
    pub fn phi(i: usize) -> EpimorphismSpec {
        let (images, relator): ([&str; 4], &str) = match i {
            1 => (["1", "2", "0", "2"], "bd"),
            2 => (["1", "2", "0", "0"], "cd"),
            3 => (["1", "2", "2", "0"], "bc"),
            4 => (["1", "2", "0", "1"], "ad"),
            5 => (["1", "2", "010", "0"], "cdad"),
            _ => panic!("built-in specs are phi1..phi5"),
        };
        let images = images.map(|s| s.parse::<DeltaWord>().unwrap());
        let relators = vec![relator.parse::<BWord>().unwrap()];
        EpimorphismSpec::new(format!("phi{i}"), images, relators).unwrap()
    }

    pub fn builtins() -> Vec<EpimorphismSpec> {
        (1..=5).map(EpimorphismSpec::phi).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn image(&self, l: BLetter) -> &DeltaWord {
        &self.images[l.index()]
    }

    pub fn kernel_relators(&self) -> &[BWord] {
        &self.kernel_relators
    }

    /// Substitutes every letter by its image and reduces.
    pub fn apply(&self, w: &BWord) -> DeltaWord {
        let mut out = DeltaWord::empty();
        for &l in w.letters() {
            out = out.concat(&self.images[l.index()]);
        }
        out
    }
}
