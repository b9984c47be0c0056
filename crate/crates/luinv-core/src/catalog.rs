//! Named example states and seeded random-state generators, so every test
//! input is reproducible from a constructor call.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::haar;
use crate::shape::{SubsystemSet, SystemShape};
use crate::state::{validate_pure, DensityMatrix, PureState, State};
use crate::tensor::apply_local_unitaries;

/// One named generator: its parameters and whether the seed matters.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameters: &'static [&'static str],
    pub seeded: bool,
}

/// Generators accepted by [`build`].
pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "ghz", parameters: &["theta"], seeded: false },
    CatalogEntry { name: "w", parameters: &["alpha", "beta", "gamma"], seeded: false },
    CatalogEntry { name: "qutrit-psi", parameters: &[], seeded: false },
    CatalogEntry { name: "example4-rho", parameters: &[], seeded: false },
    CatalogEntry { name: "example4-sigma", parameters: &[], seeded: false },
    CatalogEntry { name: "random", parameters: &["dims"], seeded: true },
];

/// Generalized GHZ state (cos θ, 0, 0, 0, 0, 0, 0, sin θ) over (2,2,2).
pub fn ghz(theta: f64) -> PureState {
    let mut amps = vec![Complex64::ZERO; 8];
    amps[0] = Complex64::new(theta.cos(), 0.0);
    amps[7] = Complex64::new(theta.sin(), 0.0);
    validate_pure(amps, SystemShape::new(vec![2, 2, 2]).unwrap())
        .expect("GHZ amplitudes are normalized by construction")
}

/// Generalized W state (0, α, β, 0, γ, 0, 0, 0) over (2,2,2); the parameters
/// must satisfy α² + β² + γ² = 1 within 1e-10.
pub fn w(alpha: f64, beta: f64, gamma: f64) -> Result<PureState> {
    let norm_sq = alpha * alpha + beta * beta + gamma * gamma;
    if (norm_sq - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm_sq });
    }
    let mut amps = vec![Complex64::ZERO; 8];
    amps[1] = Complex64::new(alpha, 0.0);
    amps[2] = Complex64::new(beta, 0.0);
    amps[4] = Complex64::new(gamma, 0.0);
    Ok(validate_pure(amps, SystemShape::new(vec![2, 2, 2]).unwrap())
        .expect("W amplitudes are normalized by construction"))
}

/// Three-qutrit maximally entangled state with phases x = e^{-2πi/3}.
pub fn qutrit_psi() -> PureState {
    let half_sqrt3 = 3.0f64.sqrt() / 2.0;
    let x = Complex64::new(-0.5, -half_sqrt3);
    let x2 = Complex64::new(-0.5, half_sqrt3);
    let one = Complex64::ONE;
    let mut amps = vec![Complex64::ZERO; 27];
    for (idx, value) in [
        (0, one),
        (4, one),
        (8, one),
        (10, x),
        (14, x),
        (15, x),
        (20, x2),
        (21, x2),
        (25, x2),
    ] {
        amps[idx] = value / 3.0;
    }
    validate_pure(amps, SystemShape::new(vec![3, 3, 3]).unwrap())
        .expect("nine entries of modulus 1/3 have unit norm")
}

/// Three-qutrit mixture: one anchored rank-1 block of weight 1/2 plus the
/// diagonal noise 1/54·Σ|0ij⟩⟨0ij| + 1/81·Σ|1ij⟩⟨1ij| + 2/81·Σ|2ij⟩⟨2ij|.
///
/// Assembled as integer numerators over the common denominator 162, converted
/// to floating point once.
fn example4_state(anchors: [usize; 3]) -> DensityMatrix {
    const DENOM: f64 = 162.0;
    // 1/54 = 3/162, 1/81 = 2/162, 2/81 = 4/162, and the block weight
    // (1/2)·(1/3) = 1/6 = 27/162
    const DIAG_NUM: [i64; 3] = [3, 2, 4];
    let mut num = [[0i64; 27]; 27];
    for idx in 0..27 {
        num[idx][idx] += DIAG_NUM[idx / 9];
    }
    for &a in &anchors {
        for &b in &anchors {
            num[a][b] += 27;
        }
    }
    let mut entries = CMatrix::zeros(27, 27);
    for (r, row) in num.iter().enumerate() {
        for (c, &n) in row.iter().enumerate() {
            if n != 0 {
                entries[(r, c)] = Complex64::new(n as f64 / DENOM, 0.0);
            }
        }
    }
    DensityMatrix::new(entries, SystemShape::new(vec![3, 3, 3]).unwrap())
        .expect("rational weights sum to a valid density matrix")
}

/// The two mixed three-qutrit states with equal global spectra: the first is
/// anchored on {|000⟩, |111⟩, |222⟩}, the second on {|001⟩, |111⟩, |222⟩}.
pub fn example4_pair() -> (DensityMatrix, DensityMatrix) {
    (example4_state([0, 13, 26]), example4_state([1, 13, 26]))
}

/// Normalized complex-Gaussian state, deterministic per seed.
pub fn random_pure(shape: SystemShape, seed: u64) -> PureState {
    let mut rng = haar::rng_from_seed(seed);
    let total = shape.total_dim();
    loop {
        let amps = haar::complex_gaussian_vec(&mut rng, total);
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            let amps = amps.into_iter().map(|z| z / norm).collect();
            return validate_pure(amps, shape).expect("normalized by construction");
        }
    }
}

/// Like [`random_pure`], but retries seed, seed+1, … (up to 10 attempts)
/// until every two-body reduced matrix has consecutive nonzero-eigenvalue
/// gaps of at least 1e-6, so the literal invariants sit on the
/// non-degenerate path.
pub fn random_pure_nondegenerate(shape: SystemShape, seed: u64) -> Result<PureState> {
    const ATTEMPTS: u64 = 10;
    const GAP: f64 = 1e-6;
    const NONZERO: f64 = 1e-9;
    for attempt in 0..ATTEMPTS {
        let psi = random_pure(shape.clone(), seed + attempt);
        let state = State::Pure(psi.clone());
        let n = shape.subsystem_count();
        let mut ok = true;
        'subsets: for i in 1..=n {
            for j in (i + 1)..=n {
                let keep = SubsystemSet::new(&[i, j], &shape)?;
                let reduced = state.reduced(&keep)?;
                let mut vals = crate::eig::hermitian_eigenvalues(reduced.entries())?;
                vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
                let nonzero: Vec<f64> = vals.into_iter().filter(|&v| v >= NONZERO).collect();
                if nonzero.windows(2).any(|w| w[0] - w[1] < GAP) {
                    ok = false;
                    break 'subsets;
                }
            }
        }
        if ok {
            return Ok(psi);
        }
    }
    Err(Error::NoNondegenerateSample { attempts: ATTEMPTS as usize })
}

/// Applies an independent Haar-random unitary to every subsystem.
pub fn lu_orbit(psi: &PureState, seed: u64) -> PureState {
    let mut rng = haar::rng_from_seed(seed);
    let ops: Vec<CMatrix> =
        psi.shape().dims().iter().map(|&d| haar::haar_unitary_with(&mut rng, d)).collect();
    apply_local_unitaries(psi, &ops).expect("operators match the state's shape")
}

fn require_param(params: &[(String, String)], key: &str) -> Result<f64> {
    let raw = params
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v)
        .ok_or_else(|| Error::BadParameter(format!("missing parameter '{key}'")))?;
    raw.parse::<f64>()
        .map_err(|_| Error::BadParameter(format!("parameter '{key}' is not a number: '{raw}'")))
}

/// Builds a catalog state by name; see [`CATALOG`] for names and parameters.
pub fn build(name: &str, params: &[(String, String)], seed: u64) -> Result<State> {
    let entry = CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalogName(name.into()))?;
    for (k, _) in params {
        if !entry.parameters.contains(&k.as_str()) {
            return Err(Error::BadParameter(format!(
                "unknown parameter '{k}' for '{name}'"
            )));
        }
    }
    match name {
        "ghz" => Ok(State::Pure(ghz(require_param(params, "theta")?))),
        "w" => {
            let alpha = require_param(params, "alpha")?;
            let beta = require_param(params, "beta")?;
            let gamma = require_param(params, "gamma")?;
            Ok(State::Pure(w(alpha, beta, gamma)?))
        }
        "qutrit-psi" => Ok(State::Pure(qutrit_psi())),
        "example4-rho" => Ok(State::Mixed(example4_pair().0)),
        "example4-sigma" => Ok(State::Mixed(example4_pair().1)),
        "random" => {
            let raw = params
                .iter()
                .find(|(k, _)| k == "dims")
                .map(|(_, v)| v)
                .ok_or_else(|| Error::BadParameter("missing parameter 'dims'".into()))?;
            let dims = raw
                .split(',')
                .map(|part| {
                    part.trim().parse::<usize>().map_err(|_| {
                        Error::BadParameter(format!("dims entry '{part}' is not an integer"))
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            let shape = SystemShape::new(dims)?;
            Ok(State::Pure(random_pure(shape, seed)))
        }
        _ => unreachable!("every registry entry is matched above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::one_body_spectra;
    use crate::state::{density_from_pure, State};

    #[test]
    fn ghz_limits() {
        let psi = ghz(0.0);
        assert_eq!(psi.amplitudes()[0], Complex64::ONE);
        assert!(psi.amplitudes()[7].norm() < 1e-15);
        let psi = ghz(core::f64::consts::FRAC_PI_4);
        assert!((psi.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ghz_two_body_reduction_at_pi_over_six() {
        let psi = ghz(core::f64::consts::PI / 6.0);
        let keep = SubsystemSet::new(&[1, 2], psi.shape()).unwrap();
        let r = State::Pure(psi).reduced(&keep).unwrap();
        assert!((r.entries()[(0, 0)].re - 0.75).abs() < 1e-12);
        assert!((r.entries()[(3, 3)].re - 0.25).abs() < 1e-12);
        for i in 1..3 {
            assert!(r.entries()[(i, i)].norm() < 1e-15);
        }
    }

    #[test]
    fn w_parameter_validation() {
        assert!(matches!(w(1.0, 1.0, 1.0), Err(Error::NotNormalized { .. })));
        assert!(w(1.0, 0.0, 0.0).is_ok());
        let psi = w(0.6, 0.8, 0.0).unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn qutrit_psi_is_maximally_entangled() {
        let psi = qutrit_psi();
        assert!((psi.norm() - 1.0).abs() < 1e-14);
        let state = State::Pure(psi.clone());
        for spec in one_body_spectra(&state).unwrap() {
            for v in spec {
                assert!((v - 1.0 / 3.0).abs() < 1e-12);
            }
        }
        // all two-body reductions share one spectrum (a triply degenerate 1/3)
        let shape = psi.shape().clone();
        let rho = density_from_pure(&psi);
        let spectra: Vec<Vec<f64>> = [[1, 2], [1, 3], [2, 3]]
            .iter()
            .map(|idx| {
                let keep = SubsystemSet::new(idx, &shape).unwrap();
                let r = crate::tensor::partial_trace(&rho, &keep).unwrap();
                let mut vals = crate::eig::hermitian_eigenvalues(r.entries()).unwrap();
                vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
                vals
            })
            .collect();
        for spec in &spectra {
            for (k, v) in spec.iter().enumerate() {
                let expect = if k < 3 { 1.0 / 3.0 } else { 0.0 };
                assert!((v - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn example4_states_are_valid_and_isospectral() {
        let (rho, sigma) = example4_pair();
        let tr = rho.entries().trace();
        assert!((tr.re - 1.0).abs() < 1e-12 && tr.im.abs() < 1e-15);
        let mut ev_r = crate::eig::hermitian_eigenvalues(rho.entries()).unwrap();
        let mut ev_s = crate::eig::hermitian_eigenvalues(sigma.entries()).unwrap();
        ev_r.sort_by(|a, b| b.partial_cmp(a).unwrap());
        ev_s.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert!((ev_r[0] - 0.51857).abs() < 1e-5);
        for (a, b) in ev_r.iter().zip(&ev_s) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn random_pure_is_seed_deterministic() {
        let shape = SystemShape::new(vec![2, 2, 2]).unwrap();
        let a = random_pure(shape.clone(), 9);
        let b = random_pure(shape.clone(), 9);
        assert_eq!(a.amplitudes(), b.amplitudes());
        assert!((a.norm() - 1.0).abs() < 1e-12);
        let c = random_pure(shape, 10);
        assert_ne!(a.amplitudes(), c.amplitudes());
    }

    #[test]
    fn nondegenerate_sampler_delivers_gapped_spectra() {
        let shape = SystemShape::new(vec![2, 2, 3]).unwrap();
        let psi = random_pure_nondegenerate(shape.clone(), 0).unwrap();
        let state = State::Pure(psi);
        for i in 1..=3usize {
            for j in (i + 1)..=3 {
                let keep = SubsystemSet::new(&[i, j], &shape).unwrap();
                let reduced = state.reduced(&keep).unwrap();
                let mut vals = crate::eig::hermitian_eigenvalues(reduced.entries()).unwrap();
                vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
                let nonzero: Vec<f64> = vals.into_iter().filter(|&v| v >= 1e-9).collect();
                assert!(nonzero.windows(2).all(|w| w[0] - w[1] >= 1e-6));
            }
        }
    }

    #[test]
    fn lu_orbit_preserves_norm_and_marginal_spectra() {
        let shape = SystemShape::new(vec![2, 2, 2]).unwrap();
        let psi = random_pure(shape, 17);
        let rotated = lu_orbit(&psi, 99);
        assert!((rotated.norm() - 1.0).abs() < 1e-12);
        let sa = one_body_spectra(&State::Pure(psi)).unwrap();
        let sb = one_body_spectra(&State::Pure(rotated)).unwrap();
        for (a, b) in sa.iter().zip(&sb) {
            for (x, y) in a.iter().zip(b) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn catalog_dispatch() {
        let params = vec![("theta".into(), "0.5".into())];
        assert!(matches!(build("ghz", &params, 0), Ok(State::Pure(_))));
        assert!(matches!(build("nope", &[], 0), Err(Error::UnknownCatalogName(_))));
        assert!(matches!(build("ghz", &[], 0), Err(Error::BadParameter(_))));
        let bad = vec![
            ("alpha".into(), "1".into()),
            ("beta".into(), "1".into()),
            ("gamma".into(), "1".into()),
        ];
        assert!(matches!(build("w", &bad, 0), Err(Error::NotNormalized { .. })));
        let dims = vec![("dims".into(), "2,3".into())];
        match build("random", &dims, 5).unwrap() {
            State::Pure(p) => assert_eq!(p.shape().dims(), &[2, 3]),
            State::Mixed(_) => panic!("random must be pure"),
        }
        assert!(matches!(build("example4-rho", &[], 0), Ok(State::Mixed(_))));
    }
}
