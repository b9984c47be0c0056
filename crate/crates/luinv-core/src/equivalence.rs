//! Fingerprint comparison and verdict reporting.
//!
//! Equal invariants are a necessary condition for local-unitary equivalence,
//! never a sufficient one, so the only possible outcomes are NOT_EQUIVALENT
//! (with a witness) and INCONCLUSIVE.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::invariants::Fingerprint;

/// Default absolute tolerance on coefficients and spectra.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Fixed caveat emitted with every INCONCLUSIVE report.
pub const INCONCLUSIVE_CAVEAT: &str = "INCONCLUSIVE means every compared invariant agrees within \
tolerance; this is a necessary condition only and does NOT establish local-unitary equivalence.";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    NotEquivalent,
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::NotEquivalent => write!(f, "NOT_EQUIVALENT"),
            Outcome::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    OneBodySpectrum,
    Robust,
    Literal,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessKind::OneBodySpectrum => write!(f, "one-body spectrum"),
            WitnessKind::Robust => write!(f, "robust coefficient"),
            WitnessKind::Literal => write!(f, "literal coefficient"),
        }
    }
}

/// The first compared quantity whose difference exceeded the tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    /// Subset of the differing quantity; a single index for spectra.
    pub subset: Vec<usize>,
    /// Unfolding position; 0 for spectra.
    pub unfold_position: usize,
    pub kind: WitnessKind,
    /// Coefficient index (ascending power) or eigenvalue index (descending).
    pub index: usize,
    pub value_a: Complex64,
    pub value_b: Complex64,
    pub difference: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub tolerance_used: f64,
}

/// Compares two fingerprints at absolute tolerance `tol`.
///
/// Comparison order is deterministic: one-body spectra first, then keys in
/// lexicographic (subset, position) order; per key the robust vector is
/// always compared while the literal vector is skipped when either side
/// carries the degenerate-with-complex-source flag or the fingerprints are
/// robust-only. The first exceedance becomes the witness.
pub fn compare(a: &Fingerprint, b: &Fingerprint, tol: f64) -> Result<Verdict> {
    if a.shape != b.shape {
        return Err(Error::ShapeMismatch(format!(
            "fingerprints over shapes {:?} and {:?}",
            a.shape, b.shape
        )));
    }
    if a.conventions != b.conventions {
        return Err(Error::ConventionMismatch(
            "fingerprints were computed under different conventions".into(),
        ));
    }
    let keys_a = a.keys();
    let keys_b = b.keys();
    if keys_a != keys_b {
        return Err(Error::ConventionMismatch(format!(
            "fingerprints cover different invariant sets: {} vs {} keys",
            keys_a.len(),
            keys_b.len()
        )));
    }

    for (i, (sa, sb)) in a.one_body_spectra.iter().zip(&b.one_body_spectra).enumerate() {
        for (k, (&va, &vb)) in sa.iter().zip(sb).enumerate() {
            let diff = (va - vb).abs();
            if diff > tol {
                return Ok(Verdict {
                    outcome: Outcome::NotEquivalent,
                    witness: Some(Witness {
                        subset: alloc::vec![i + 1],
                        unfold_position: 0,
                        kind: WitnessKind::OneBodySpectrum,
                        index: k,
                        value_a: Complex64::new(va, 0.0),
                        value_b: Complex64::new(vb, 0.0),
                        difference: diff,
                    }),
                    tolerance_used: tol,
                });
            }
        }
    }

    for key in &keys_a {
        let sa = &a.invariant_sets[key];
        let sb = &b.invariant_sets[key];
        for (k, (&va, &vb)) in
            sa.robust.coefficients().iter().zip(sb.robust.coefficients()).enumerate()
        {
            let diff = (va - vb).norm();
            if diff > tol {
                return Ok(Verdict {
                    outcome: Outcome::NotEquivalent,
                    witness: Some(Witness {
                        subset: key.0.clone(),
                        unfold_position: key.1,
                        kind: WitnessKind::Robust,
                        index: k,
                        value_a: va,
                        value_b: vb,
                        difference: diff,
                    }),
                    tolerance_used: tol,
                });
            }
        }
        let convention_dependent =
            (sa.degenerate && sa.complex_source) || (sb.degenerate && sb.complex_source);
        if a.conventions.robust_only || convention_dependent {
            continue;
        }
        if let (Some(la), Some(lb)) = (&sa.literal, &sb.literal) {
            for (k, (&va, &vb)) in la.coefficients().iter().zip(lb.coefficients()).enumerate() {
                let diff = (va - vb).norm();
                if diff > tol {
                    return Ok(Verdict {
                        outcome: Outcome::NotEquivalent,
                        witness: Some(Witness {
                            subset: key.0.clone(),
                            unfold_position: key.1,
                            kind: WitnessKind::Literal,
                            index: k,
                            value_a: va,
                            value_b: vb,
                            difference: diff,
                        }),
                        tolerance_used: tol,
                    });
                }
            }
        }
    }

    Ok(Verdict { outcome: Outcome::Inconclusive, witness: None, tolerance_used: tol })
}

fn format_subset(indices: &[usize]) -> String {
    let mut s = String::from("{");
    for (i, idx) in indices.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&format!("{idx}"));
    }
    s.push('}');
    s
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.12e}", z.re)
    } else {
        format!("{:.12e}{:+.12e}i", z.re, z.im)
    }
}

/// Human-readable comparison report.
pub fn render_report(verdict: &Verdict, a_label: &str, b_label: &str, a: &Fingerprint) -> String {
    let mut out = String::new();
    out.push_str(&format!("comparison of '{a_label}' vs '{b_label}'\n"));
    out.push_str(&format!(
        "compared: {} one-body spectra, {} invariant sets, tolerance {:.3e}\n",
        a.one_body_spectra.len(),
        a.invariant_sets.len(),
        verdict.tolerance_used
    ));
    let mut robust_only_keys: Vec<String> = Vec::new();
    let mut flagged: Vec<String> = Vec::new();
    for ((subset, pos), set) in &a.invariant_sets {
        let name = format!("subset {} position {pos}", format_subset(subset));
        if set.degenerate || set.complex_source {
            let mut tags: Vec<&str> = Vec::new();
            if set.degenerate {
                tags.push("degenerate");
            }
            if set.complex_source {
                tags.push("complex");
            }
            flagged.push(format!("{name} [{}]", tags.join(", ")));
        }
        if a.conventions.robust_only || (set.degenerate && set.complex_source) {
            robust_only_keys.push(name);
        }
    }
    if !flagged.is_empty() {
        out.push_str("flags raised:\n");
        for f in &flagged {
            out.push_str(&format!("  {f}\n"));
        }
    }
    if !robust_only_keys.is_empty() {
        out.push_str("compared by robust variant only (literal convention-dependent):\n");
        for k in &robust_only_keys {
            out.push_str(&format!("  {k}\n"));
        }
    }
    out.push_str(&format!("outcome: {}\n", verdict.outcome));
    match (&verdict.outcome, &verdict.witness) {
        (Outcome::NotEquivalent, Some(w)) => {
            out.push_str(&format!(
                "witness: {} of subset {}{} at index {}\n",
                w.kind,
                format_subset(&w.subset),
                if w.unfold_position > 0 {
                    format!(" position {}", w.unfold_position)
                } else {
                    String::new()
                },
                w.index
            ));
            out.push_str(&format!("  value in '{a_label}': {}\n", format_complex(w.value_a)));
            out.push_str(&format!("  value in '{b_label}': {}\n", format_complex(w.value_b)));
            out.push_str(&format!(
                "  |difference| = {:.6e} > tolerance {:.3e}\n",
                w.difference, verdict.tolerance_used
            ));
        }
        _ => {
            out.push_str(INCONCLUSIVE_CAVEAT);
            out.push('\n');
        }
    }
    out
}
