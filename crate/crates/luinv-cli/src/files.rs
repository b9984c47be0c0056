//! Versioned JSON file formats. Every number is a 17-significant-digit
//! decimal string, so files round-trip bit-exactly and diff cleanly across
//! platforms.

use luinv_core::invariants::{Conventions, Fingerprint, InvariantSet};
use luinv_core::{
    validate_pure, CMatrix, CoefficientVector, DensityMatrix, State, SystemShape,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const STATE_FILE_VERSION: u32 = 1;
pub const FINGERPRINT_FILE_VERSION: u32 = 1;

/// Complex number as a [re, im] pair of decimal strings.
pub type Cx = [String; 2];

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateData {
    Pure(Vec<Cx>),
    Mixed(Vec<Vec<Cx>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub version: u32,
    /// "pure" or "mixed".
    pub kind: String,
    pub dims: Vec<usize>,
    pub data: StateData,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConventionsFile {
    pub coefficient_order: String,
    pub rank_cutoff: String,
    pub degeneracy_tol: String,
    pub real_path_tol: String,
    pub phase_tie_tol: String,
    pub robust_only: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvariantSetFile {
    pub subset: Vec<usize>,
    pub position: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub literal: Option<Vec<Cx>>,
    pub robust: Vec<Cx>,
    pub degenerate: bool,
    pub complex_source: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FingerprintFile {
    pub version: u32,
    /// Always "fingerprint".
    pub kind: String,
    pub shape: Vec<usize>,
    pub conventions: ConventionsFile,
    pub one_body_spectra: Vec<Vec<String>>,
    pub invariant_sets: Vec<InvariantSetFile>,
}

/// Errors split by exit-code class: malformed input vs failed state
/// validation.
#[derive(Debug)]
pub enum LoadError {
    Parse(String),
    Validation(String),
}

impl LoadError {
    fn parse(msg: impl Into<String>) -> Self {
        LoadError::Parse(msg.into())
    }
}

pub fn encode_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn decode_f64(s: &str) -> Result<f64, LoadError> {
    s.parse::<f64>().map_err(|_| LoadError::parse(format!("not a decimal number: '{s}'")))
}

fn encode_complex(z: Complex64) -> Cx {
    [encode_f64(z.re), encode_f64(z.im)]
}

fn decode_complex(cx: &Cx) -> Result<Complex64, LoadError> {
    Ok(Complex64::new(decode_f64(&cx[0])?, decode_f64(&cx[1])?))
}

pub fn state_to_file(state: &State) -> StateFile {
    match state {
        State::Pure(psi) => StateFile {
            version: STATE_FILE_VERSION,
            kind: "pure".into(),
            dims: psi.shape().dims().to_vec(),
            data: StateData::Pure(psi.amplitudes().iter().map(|&z| encode_complex(z)).collect()),
        },
        State::Mixed(rho) => {
            let side = rho.side();
            let rows = (0..side)
                .map(|r| rho.entries().row(r).iter().map(|&z| encode_complex(z)).collect())
                .collect();
            StateFile {
                version: STATE_FILE_VERSION,
                kind: "mixed".into(),
                dims: rho.shape().dims().to_vec(),
                data: StateData::Mixed(rows),
            }
        }
    }
}

pub fn file_to_state(file: &StateFile) -> Result<State, LoadError> {
    if file.version != STATE_FILE_VERSION {
        return Err(LoadError::parse(format!("unsupported state file version {}", file.version)));
    }
    let shape = SystemShape::new(file.dims.clone())
        .map_err(|e| LoadError::Validation(e.to_string()))?;
    match (file.kind.as_str(), &file.data) {
        ("pure", StateData::Pure(entries)) => {
            if entries.len() != shape.total_dim() {
                return Err(LoadError::parse(format!(
                    "pure data holds {} amplitudes, dims require {}",
                    entries.len(),
                    shape.total_dim()
                )));
            }
            let amps = entries.iter().map(decode_complex).collect::<Result<Vec<_>, _>>()?;
            let psi =
                validate_pure(amps, shape).map_err(|e| LoadError::Validation(e.to_string()))?;
            Ok(State::Pure(psi))
        }
        ("mixed", StateData::Mixed(rows)) => {
            let side = shape.total_dim();
            if rows.len() != side || rows.iter().any(|r| r.len() != side) {
                return Err(LoadError::parse(format!(
                    "mixed data must be a {side}x{side} matrix of [re, im] pairs"
                )));
            }
            let mut m = CMatrix::zeros(side, side);
            for (r, row) in rows.iter().enumerate() {
                for (c, cx) in row.iter().enumerate() {
                    m[(r, c)] = decode_complex(cx)?;
                }
            }
            let rho = DensityMatrix::new(m, shape)
                .map_err(|e| LoadError::Validation(e.to_string()))?;
            Ok(State::Mixed(rho))
        }
        ("pure", _) | ("mixed", _) => {
            Err(LoadError::parse(format!("data layout does not match kind '{}'", file.kind)))
        }
        (other, _) => Err(LoadError::parse(format!("unknown state kind '{other}'"))),
    }
}

fn coefficients_to_file(v: &CoefficientVector) -> Vec<Cx> {
    v.coefficients().iter().map(|&z| encode_complex(z)).collect()
}

fn coefficients_from_file(entries: &[Cx]) -> Result<CoefficientVector, LoadError> {
    if entries.is_empty() {
        return Err(LoadError::parse("empty coefficient vector"));
    }
    let coeffs = entries.iter().map(decode_complex).collect::<Result<Vec<_>, _>>()?;
    Ok(CoefficientVector::new(coeffs))
}

pub fn fingerprint_to_file(fp: &Fingerprint) -> FingerprintFile {
    FingerprintFile {
        version: FINGERPRINT_FILE_VERSION,
        kind: "fingerprint".into(),
        shape: fp.shape.clone(),
        conventions: ConventionsFile {
            coefficient_order: "ascending".into(),
            rank_cutoff: encode_f64(fp.conventions.rank_cutoff),
            degeneracy_tol: encode_f64(fp.conventions.degeneracy_tol),
            real_path_tol: encode_f64(fp.conventions.real_path_tol),
            phase_tie_tol: encode_f64(fp.conventions.phase_tie_tol),
            robust_only: fp.conventions.robust_only,
        },
        one_body_spectra: fp
            .one_body_spectra
            .iter()
            .map(|spec| spec.iter().map(|&v| encode_f64(v)).collect())
            .collect(),
        invariant_sets: fp
            .invariant_sets
            .values()
            .map(|set| InvariantSetFile {
                subset: set.subset.clone(),
                position: set.unfold_position,
                literal: set.literal.as_ref().map(coefficients_to_file),
                robust: coefficients_to_file(&set.robust),
                degenerate: set.degenerate,
                complex_source: set.complex_source,
            })
            .collect(),
    }
}

pub fn file_to_fingerprint(file: &FingerprintFile) -> Result<Fingerprint, LoadError> {
    if file.version != FINGERPRINT_FILE_VERSION {
        return Err(LoadError::parse(format!(
            "unsupported fingerprint file version {}",
            file.version
        )));
    }
    if file.kind != "fingerprint" {
        return Err(LoadError::parse(format!("unexpected kind '{}'", file.kind)));
    }
    if file.conventions.coefficient_order != "ascending" {
        return Err(LoadError::parse(format!(
            "unsupported coefficient order '{}'",
            file.conventions.coefficient_order
        )));
    }
    let conventions = Conventions {
        rank_cutoff: decode_f64(&file.conventions.rank_cutoff)?,
        degeneracy_tol: decode_f64(&file.conventions.degeneracy_tol)?,
        real_path_tol: decode_f64(&file.conventions.real_path_tol)?,
        phase_tie_tol: decode_f64(&file.conventions.phase_tie_tol)?,
        robust_only: file.conventions.robust_only,
    };
    let one_body_spectra = file
        .one_body_spectra
        .iter()
        .map(|spec| spec.iter().map(|s| decode_f64(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut invariant_sets = BTreeMap::new();
    for set in &file.invariant_sets {
        let parsed = InvariantSet {
            subset: set.subset.clone(),
            unfold_position: set.position,
            literal: set.literal.as_deref().map(coefficients_from_file).transpose()?,
            robust: coefficients_from_file(&set.robust)?,
            degenerate: set.degenerate,
            complex_source: set.complex_source,
        };
        if invariant_sets.insert((set.subset.clone(), set.position), parsed).is_some() {
            return Err(LoadError::parse(format!(
                "duplicate invariant set for subset {:?} position {}",
                set.subset, set.position
            )));
        }
    }
    Ok(Fingerprint { shape: file.shape.clone(), one_body_spectra, invariant_sets, conventions })
}

/// Either supported input file, detected by the "kind" field.
pub enum InputFile {
    State(StateFile),
    Fingerprint(FingerprintFile),
}

pub fn parse_input(text: &str) -> Result<InputFile, LoadError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| LoadError::parse(format!("invalid JSON: {e}")))?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| LoadError::parse("missing 'kind' field"))?;
    match kind {
        "pure" | "mixed" => serde_json::from_value::<StateFile>(value)
            .map(InputFile::State)
            .map_err(|e| LoadError::parse(format!("malformed state file: {e}"))),
        "fingerprint" => serde_json::from_value::<FingerprintFile>(value)
            .map(InputFile::Fingerprint)
            .map_err(|e| LoadError::parse(format!("malformed fingerprint file: {e}"))),
        other => Err(LoadError::parse(format!("unknown kind '{other}'"))),
    }
}
