//! File formats: hypermaps (plain text and JSON), presentations and
//! epimorphism spec files, all over the word notation of the `word` module.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypermap::{Hypermap, HypermapError};
use crate::word::{BWord, DeltaWord, EpimorphismSpec, SpecError, WordParseError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed hypermap file: {0}")]
    MalformedHypermap(String),
    #[error("malformed presentation file: {0}")]
    MalformedPresentation(String),
    #[error("malformed epimorphism spec: {0}")]
    MalformedSpec(String),
    #[error(transparent)]
    Word(#[from] WordParseError),
    #[error(transparent)]
    Hypermap(#[from] HypermapError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Serialize, Deserialize)]
struct HypermapRecord {
    n: usize,
    h0: Vec<usize>,
    h1: Vec<usize>,
    h2: Vec<usize>,
}

/// Parses either format: JSON (object with keys n, h0, h1, h2) when the
/// input starts with `{`, otherwise the 4-line text format.
pub fn parse_hypermap(text: &str) -> Result<Hypermap, IoError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let rec: HypermapRecord = serde_json::from_str(trimmed)?;
        return Ok(Hypermap::new(rec.n, rec.h0, rec.h1, rec.h2)?);
    }
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| IoError::MalformedHypermap("missing flag count line".into()))?
        .trim()
        .parse()
        .map_err(|e| IoError::MalformedHypermap(format!("bad flag count: {e}")))?;
    let mut gens = Vec::with_capacity(3);
    for i in 0..3 {
        let line = lines
            .next()
            .ok_or_else(|| IoError::MalformedHypermap(format!("missing line for h{i}")))?;
        let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        gens.push(row.map_err(|e| IoError::MalformedHypermap(format!("bad image in h{i}: {e}")))?);
    }
    let [h0, h1, h2]: [Vec<usize>; 3] = gens.try_into().unwrap();
    Ok(Hypermap::new(n, h0, h1, h2)?)
}

/// The bit-exact text format: line 1 the flag count, lines 2-4 the
/// space-separated images of h0, h1, h2.
pub fn hypermap_to_text(h: &Hypermap) -> String {
    let mut out = format!("{}\n", h.flag_count());
    for i in 0..3 {
        let row: Vec<String> = h.generator(i).iter().map(|f| f.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn hypermap_to_json(h: &Hypermap) -> String {
    let rec = HypermapRecord {
        n: h.flag_count(),
        h0: h.generator(0).to_vec(),
        h1: h.generator(1).to_vec(),
        h2: h.generator(2).to_vec(),
    };
    serde_json::to_string(&rec).expect("hypermap record serializes")
}

/// A parsed presentation file: `delta` relators are Δ-words over 0,1,2;
/// `b` relators are Δ^0-words over a,b,c,d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedPresentation {
    Delta(Vec<DeltaWord>),
    B(Vec<BWord>),
}

/// First line `delta` or `b`, then one relator word per line.
pub fn parse_presentation(text: &str) -> Result<ParsedPresentation, IoError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head = lines
        .next()
        .ok_or_else(|| IoError::MalformedPresentation("empty file".into()))?
        .trim();
    match head {
        "delta" => {
            let relators: Result<Vec<DeltaWord>, _> = lines.map(str::parse).collect();
            Ok(ParsedPresentation::Delta(relators?))
        }
        "b" => {
            let relators: Result<Vec<BWord>, _> = lines.map(str::parse).collect();
            Ok(ParsedPresentation::B(relators?))
        }
        other => Err(IoError::MalformedPresentation(format!(
            "first line must be `delta` or `b`, got {other:?}"
        ))),
    }
}

/// Four lines of Δ-words (images of a, b, c, d), then optional
/// `kernel: WORD` lines of Δ^0-words normally generating the kernel.
pub fn parse_epimorphism_spec(text: &str, name: &str) -> Result<EpimorphismSpec, IoError> {
    let mut images = Vec::with_capacity(4);
    let mut kernel = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(rest) = line.strip_prefix("kernel:") {
            kernel.push(rest.trim().parse::<BWord>()?);
        } else {
            images.push(line.parse::<DeltaWord>()?);
        }
    }
    let images: [DeltaWord; 4] = images.try_into().map_err(|v: Vec<_>| {
        IoError::MalformedSpec(format!("expected 4 image words, got {}", v.len()))
    })?;
    Ok(EpimorphismSpec::new(name, images, kernel)?)
}

/// Resolves a spec selector: `phi1`..`phi5` or a file path.
pub fn load_spec(selector: &str) -> Result<EpimorphismSpec, IoError> {
    if let Some(digit) = selector.strip_prefix("phi") {
        if let Ok(i @ 1..=5) = digit.parse::<usize>() {
            return Ok(EpimorphismSpec::phi(i));
        }
    }
    let text = std::fs::read_to_string(selector)
        .map_err(|e| IoError::MalformedSpec(format!("cannot read {selector}: {e}")))?;
    parse_epimorphism_spec(&text, selector)
}
