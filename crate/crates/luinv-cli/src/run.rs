//! Command implementations and the exit-code mapping.
//!
//! 0 = success / INCONCLUSIVE, 1 = NOT_EQUIVALENT, 2 = parse or usage error,
//! 3 = state validation error, 4 = shape or convention mismatch.

use std::fs;
use std::path::Path;

use luinv_core::equivalence::{self, Outcome};
use luinv_core::invariants::{fingerprint_for_keys, Fingerprint, FingerprintKey};
use luinv_core::{catalog, full_fingerprint, Error as CoreError, State};
use serde::Serialize;

use crate::files::{self, InputFile, LoadError};

pub const EXIT_NOT_EQUIVALENT: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_VALIDATION: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

/// Environment variable overriding the default comparison tolerance.
pub const TOL_ENV_VAR: &str = "LUINV_TOL";

pub struct CmdError {
    pub code: u8,
    pub message: String,
}

impl CmdError {
    fn parse(message: impl Into<String>) -> Self {
        CmdError { code: EXIT_PARSE, message: message.into() }
    }

    fn validation(message: impl Into<String>) -> Self {
        CmdError { code: EXIT_VALIDATION, message: message.into() }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        CmdError { code: EXIT_MISMATCH, message: message.into() }
    }

    fn prefixed(mut self, path: &Path) -> Self {
        self.message = format!("{}: {}", path.display(), self.message);
        self
    }
}

impl From<LoadError> for CmdError {
    fn from(err: LoadError) -> Self {
        match err {
            LoadError::Parse(msg) => CmdError::parse(msg),
            LoadError::Validation(msg) => CmdError::validation(msg),
        }
    }
}

fn core_error(err: CoreError) -> CmdError {
    match err {
        CoreError::ShapeMismatch(_) | CoreError::ConventionMismatch(_) => {
            CmdError::mismatch(err.to_string())
        }
        CoreError::UnknownCatalogName(_) | CoreError::BadParameter(_) => {
            CmdError::parse(err.to_string())
        }
        other => CmdError::validation(other.to_string()),
    }
}

fn read_input(path: &Path) -> Result<InputFile, CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::parse(format!("cannot read {}: {e}", path.display())))?;
    files::parse_input(&text)
        .map_err(|e| CmdError::from(e).prefixed(path))
}

fn load_state(path: &Path) -> Result<State, CmdError> {
    match read_input(path)? {
        InputFile::State(f) => {
            files::file_to_state(&f).map_err(|e| CmdError::from(e).prefixed(path))
        }
        InputFile::Fingerprint(_) => Err(CmdError::parse(format!(
            "{}: expected a state file, found a fingerprint",
            path.display()
        ))),
    }
}

fn parse_subset_specs(specs: &[String], all_positions: bool) -> Result<Vec<FingerprintKey>, CmdError> {
    let mut keys = Vec::new();
    for spec in specs {
        let mut indices = spec
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| CmdError::parse(format!("bad subset entry '{part}' in '{spec}'")))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        indices.sort_unstable();
        indices.dedup();
        if indices.len() < 2 {
            return Err(CmdError::parse(format!(
                "subset '{spec}' needs at least two distinct indices"
            )));
        }
        let positions: Vec<usize> =
            if all_positions { (1..=indices.len()).collect() } else { vec![1] };
        for x in positions {
            keys.push((indices.clone(), x));
        }
    }
    Ok(keys)
}

fn format_complex_cell(z: num_complex::Complex64) -> String {
    if z.im == 0.0 {
        format!("{:+.10e}", z.re)
    } else {
        format!("{:+.10e}{:+.10e}i", z.re, z.im)
    }
}

fn print_fingerprint_tables(fp: &Fingerprint) {
    println!("shape: {:?}", fp.shape);
    println!(
        "coefficient tables list c_k of det(lambda*I - Omega) in ascending powers;"
    );
    println!(
        "the monic leading coefficient is the last row. Descending-order listings read bottom-up."
    );
    println!();
    println!("one-body spectra (descending eigenvalues):");
    for (i, spec) in fp.one_body_spectra.iter().enumerate() {
        let cells: Vec<String> = spec.iter().map(|v| format!("{v:+.10e}")).collect();
        println!("  subsystem {}: {}", i + 1, cells.join("  "));
    }
    for ((subset, position), set) in &fp.invariant_sets {
        let mut flags = Vec::new();
        if set.degenerate {
            flags.push("degenerate");
        }
        if set.complex_source {
            flags.push("complex");
        }
        println!();
        println!(
            "subset {:?} position {position}{}",
            subset,
            if flags.is_empty() { String::new() } else { format!("   flags: {}", flags.join(", ")) }
        );
        println!("  {:>3}  {:<34}  {:<34}", "k", "literal", "robust");
        let robust = set.robust.coefficients();
        for k in 0..robust.len() {
            let literal_cell = match &set.literal {
                Some(lit) => format_complex_cell(lit.coefficients()[k]),
                None => "(omitted)".to_string(),
            };
            println!(
                "  {:>3}  {:<34}  {:<34}",
                k,
                literal_cell,
                format_complex_cell(robust[k])
            );
        }
    }
}

pub fn invariants(
    state_path: &Path,
    subsets: &[String],
    max_k: usize,
    all_positions: bool,
    robust_only: bool,
    out: Option<&Path>,
) -> Result<u8, CmdError> {
    let state = load_state(state_path)?;
    let mut fp = if subsets.is_empty() {
        full_fingerprint(&state, max_k, all_positions).map_err(core_error)?
    } else {
        let keys = parse_subset_specs(subsets, all_positions)?;
        fingerprint_for_keys(&state, &keys).map_err(core_error)?
    };
    if robust_only {
        fp.strip_literals();
    }
    println!("state: {}", state_path.display());
    print_fingerprint_tables(&fp);
    if let Some(path) = out {
        let file = files::fingerprint_to_file(&fp);
        let text = serde_json::to_string_pretty(&file)
            .expect("fingerprint serialization cannot fail");
        fs::write(path, text)
            .map_err(|e| CmdError::validation(format!("cannot write {}: {e}", path.display())))?;
        println!();
        println!("fingerprint written to {}", path.display());
    }
    Ok(0)
}

enum LoadedInput {
    State(State),
    Fingerprint(Fingerprint),
}

fn load_either(path: &Path) -> Result<LoadedInput, CmdError> {
    match read_input(path)? {
        InputFile::State(f) => Ok(LoadedInput::State(
            files::file_to_state(&f).map_err(|e| CmdError::from(e).prefixed(path))?,
        )),
        InputFile::Fingerprint(f) => Ok(LoadedInput::Fingerprint(
            files::file_to_fingerprint(&f).map_err(|e| CmdError::from(e).prefixed(path))?,
        )),
    }
}

fn fingerprint_like(
    state: &State,
    template: &Fingerprint,
) -> Result<Fingerprint, CmdError> {
    let keys = template.keys();
    let mut fp = fingerprint_for_keys(state, &keys).map_err(core_error)?;
    if template.conventions.robust_only {
        fp.strip_literals();
    }
    Ok(fp)
}

#[derive(Serialize)]
struct WitnessJson {
    kind: String,
    subset: Vec<usize>,
    position: usize,
    index: usize,
    value_a: [String; 2],
    value_b: [String; 2],
    difference: String,
}

#[derive(Serialize)]
struct VerdictJson {
    outcome: String,
    tolerance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
}

pub fn compare(
    a_path: &Path,
    b_path: &Path,
    tol: Option<f64>,
    json: bool,
    max_k: usize,
    all_positions: bool,
) -> Result<u8, CmdError> {
    let tol = match tol {
        Some(t) => t,
        None => match std::env::var(TOL_ENV_VAR) {
            Ok(raw) => raw.parse::<f64>().map_err(|_| {
                CmdError::parse(format!("{TOL_ENV_VAR} is not a number: '{raw}'"))
            })?,
            Err(_) => equivalence::DEFAULT_TOLERANCE,
        },
    };
    let a = load_either(a_path)?;
    let b = load_either(b_path)?;
    let (fa, fb) = match (a, b) {
        (LoadedInput::Fingerprint(fa), LoadedInput::Fingerprint(fb)) => (fa, fb),
        (LoadedInput::Fingerprint(fa), LoadedInput::State(sb)) => {
            let fb = fingerprint_like(&sb, &fa)?;
            (fa, fb)
        }
        (LoadedInput::State(sa), LoadedInput::Fingerprint(fb)) => {
            let fa = fingerprint_like(&sa, &fb)?;
            (fa, fb)
        }
        (LoadedInput::State(sa), LoadedInput::State(sb)) => {
            let fa = full_fingerprint(&sa, max_k, all_positions).map_err(core_error)?;
            let fb = full_fingerprint(&sb, max_k, all_positions).map_err(core_error)?;
            (fa, fb)
        }
    };
    let verdict = equivalence::compare(&fa, &fb, tol).map_err(core_error)?;
    if json {
        let payload = VerdictJson {
            outcome: verdict.outcome.to_string(),
            tolerance: files::encode_f64(verdict.tolerance_used),
            witness: verdict.witness.as_ref().map(|w| WitnessJson {
                kind: match w.kind {
                    luinv_core::WitnessKind::OneBodySpectrum => "one_body_spectrum".into(),
                    luinv_core::WitnessKind::Robust => "robust".into(),
                    luinv_core::WitnessKind::Literal => "literal".into(),
                },
                subset: w.subset.clone(),
                position: w.unfold_position,
                index: w.index,
                value_a: [files::encode_f64(w.value_a.re), files::encode_f64(w.value_a.im)],
                value_b: [files::encode_f64(w.value_b.re), files::encode_f64(w.value_b.im)],
                difference: files::encode_f64(w.difference),
            }),
        };
        println!("{}", serde_json::to_string_pretty(&payload).expect("serialization"));
    } else {
        let a_label = a_path.display().to_string();
        let b_label = b_path.display().to_string();
        print!("{}", equivalence::render_report(&verdict, &a_label, &b_label, &fa));
    }
    Ok(match verdict.outcome {
        Outcome::NotEquivalent => EXIT_NOT_EQUIVALENT,
        Outcome::Inconclusive => 0,
    })
}

pub fn example(
    name: &str,
    params: &[String],
    seed: u64,
    out: Option<&Path>,
) -> Result<u8, CmdError> {
    let mut parsed: Vec<(String, String)> = Vec::new();
    for p in params {
        let (key, value) = p
            .split_once('=')
            .ok_or_else(|| CmdError::parse(format!("parameter '{p}' is not of the form k=v")))?;
        parsed.push((key.trim().to_string(), value.trim().to_string()));
    }
    let state = catalog::build(name, &parsed, seed).map_err(|e| CmdError::parse(e.to_string()))?;
    let file = files::state_to_file(&state);
    let text = serde_json::to_string_pretty(&file).expect("state serialization cannot fail");
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CmdError::validation(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    Ok(0)
}
