//! Subcommand implementations behind the `tropical-lax` binary.
//!
//! Each command takes a parsed potential and returns what to print and the
//! exit code; the binary only does argument parsing and IO.

pub mod formats;

use std::fmt;

use serde::Serialize;
use tropical_lax::bbs::{evolve, render_timeline};
use tropical_lax::constraints::{compute_mu, full_system_check, ConstraintReport, Violation};
use tropical_lax::lax::{
    build_matrix, classify_case, compute_k, detect_solitons, fundamental_eigenvector, fundamental_pair,
};
use tropical_lax::spectral::{critical_graph, eigenspace_basis, max_cycle_mean};
use tropical_lax::undress::{solitons_after, undress_closed_form, undress_crosscheck};
use tropical_lax::{LaxMatrix, MaxPlus, Potential, Rational, Soliton};

use formats::{format_maxplus, format_rational, MatrixJson, PotentialJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Input or usage problems; always exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<tropical_lax::Error> for CliError {
    fn from(e: tropical_lax::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<formats::FormatError> for CliError {
    fn from(e: formats::FormatError) -> Self {
        CliError(e.0)
    }
}

/// What a command wants printed, and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: Vec::new(), code: EXIT_OK }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn warnings(u: &Potential) -> Vec<String> {
    u.warnings().iter().map(|w| format!("warning: {w}")).collect()
}

#[derive(Serialize)]
struct SolitonJson {
    l: i64,
    s: i64,
}

impl From<&Soliton> for SolitonJson {
    fn from(sol: &Soliton) -> Self {
        SolitonJson { l: sol.l, s: sol.s }
    }
}

#[derive(Serialize)]
struct WindowJson {
    lo: i64,
    hi: i64,
}

fn select_soliton(u: &Potential, index: usize) -> Result<Soliton, CliError> {
    let sols = detect_solitons(u);
    sols.get(index).copied().ok_or_else(|| {
        CliError(format!("soliton index {index} out of range: the potential has {} soliton(s)", sols.len()))
    })
}

#[derive(Serialize)]
struct ClassifyJson {
    case: &'static str,
    v_sup: String,
    k: String,
    solitons: Vec<SolitonJson>,
}

pub fn cmd_classify(u: &Potential) -> Output {
    let c = classify_case(u);
    let report = ClassifyJson {
        case: c.case.as_str(),
        v_sup: format_rational(&c.v_sup),
        k: format_rational(&compute_k(u)),
        solitons: detect_solitons(u).iter().map(SolitonJson::from).collect(),
    };
    Output { stderr: warnings(u), ..Output::ok(to_json(&report)) }
}

#[derive(Serialize)]
struct EigenvectorJson {
    column: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    soliton: Option<SolitonJson>,
    window: WindowJson,
    values: Vec<Option<String>>,
}

#[derive(Serialize)]
struct SpectrumJson {
    matrix: &'static str,
    k: String,
    lambda: Option<String>,
    window: WindowJson,
    critical_edges: Vec<(i64, i64)>,
    critical_components: Vec<Vec<i64>>,
    eigenvectors: Vec<EigenvectorJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lax_matrix: Option<MatrixJson>,
}

/// Spectral data of `A(γ)` or `A(δ)` on the canonical window.
///
/// With a soliton index, the one fundamental eigenvector attached to that
/// soliton is reported (tail column for `γ`, head column for `δ`,
/// normalised to 0 at the right edge); otherwise one critical column per
/// critical component.
pub fn cmd_spectrum(
    u: &Potential,
    which: LaxMatrix,
    soliton: Option<usize>,
    emit_matrix: bool,
) -> Result<Output, CliError> {
    let k = compute_k(u);
    let a = build_matrix(u, which, &k);
    let (lo, hi) = u.window();
    let crit = critical_graph(&a)?;
    let values = |v: &[MaxPlus]| v.iter().map(format_maxplus).collect();
    let eigenvectors = match soliton {
        Some(index) => {
            let sol = select_soliton(u, index)?;
            let column = match which {
                LaxMatrix::Gamma => sol.l,
                LaxMatrix::Delta => sol.head(),
            };
            let phi = fundamental_eigenvector(u, which, column, &k)?;
            vec![EigenvectorJson {
                column,
                soliton: Some(SolitonJson::from(&sol)),
                window: WindowJson { lo, hi },
                values: values(&phi.restrict_maxplus(lo, hi)),
            }]
        }
        None => eigenspace_basis(&a)?
            .into_iter()
            .map(|fe| EigenvectorJson {
                column: fe.index,
                soliton: None,
                window: WindowJson { lo, hi },
                values: values(&fe.vector),
            })
            .collect(),
    };
    let report = SpectrumJson {
        matrix: which.as_str(),
        k: format_rational(&k),
        lambda: format_maxplus(&max_cycle_mean(&a)),
        window: WindowJson { lo, hi },
        critical_edges: crit.edges.iter().copied().collect(),
        critical_components: crit.components.iter().map(|c| c.iter().copied().collect()).collect(),
        eigenvectors,
        lax_matrix: emit_matrix.then(|| MatrixJson::from_matrix(&a)),
    };
    Ok(Output { stderr: warnings(u), ..Output::ok(to_json(&report)) })
}

/// Prints the undressed potential; the cross-check against the general
/// transform and the new soliton list go to stderr.
pub fn cmd_undress(u: &Potential, soliton: usize) -> Result<Output, CliError> {
    let sol = select_soliton(u, soliton)?;
    let undressed = undress_closed_form(u, &sol)?;
    let agrees = undress_crosscheck(u, &sol)?;
    let mut stderr = warnings(u);
    stderr.push(if agrees {
        "crosscheck: general transform agrees with closed form".to_string()
    } else {
        "crosscheck: MISMATCH between general transform and closed form".to_string()
    });
    let after: Vec<String> = solitons_after(u, &sol)?.iter().map(|s| format!("(l={}, s={})", s.l, s.s)).collect();
    stderr.push(format!("solitons after undressing: [{}]", after.join(", ")));
    Ok(Output {
        stdout: to_json(&PotentialJson::from_potential(&undressed)),
        stderr,
        code: if agrees { EXIT_OK } else { EXIT_FAILED },
    })
}

#[derive(Serialize)]
struct ViolationJson {
    equation: &'static str,
    index: i64,
    lhs: Option<String>,
    rhs: Option<String>,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        ViolationJson {
            equation: v.equation.as_str(),
            index: v.index,
            lhs: format_maxplus(&v.lhs),
            rhs: format_maxplus(&v.rhs),
        }
    }
}

#[derive(Serialize)]
struct VerifyJson {
    soliton: SolitonJson,
    case: &'static str,
    k: String,
    mu: String,
    omega: String,
    window: WindowJson,
    gamma_eigen_ok: bool,
    delta_eigen_ok: bool,
    backward_ok: bool,
    forward_ok: bool,
    all_ok: bool,
    first_violation: Option<ViolationJson>,
}

/// Checks the soliton's fundamental pair against all four equations.
/// `μ` defaults to the soliton's own value.
pub fn cmd_verify(u: &Potential, soliton: usize, mu: Option<Rational>) -> Result<Output, CliError> {
    let sol = select_soliton(u, soliton)?;
    let pair = fundamental_pair(u, &sol)?;
    let mu = mu.unwrap_or_else(|| compute_mu(u, &sol));
    let report: ConstraintReport = full_system_check(u, &pair.phi1, &pair.phi2, &pair.k, &mu)?;
    let (lo, hi) = report.window;
    let json = VerifyJson {
        soliton: SolitonJson::from(&sol),
        case: sol.case.as_str(),
        k: format_rational(&pair.k),
        mu: format_rational(&report.mu),
        omega: format_rational(&report.omega),
        window: WindowJson { lo, hi },
        gamma_eigen_ok: report.gamma_eigen_ok,
        delta_eigen_ok: report.delta_eigen_ok,
        backward_ok: report.backward_ok,
        forward_ok: report.forward_ok,
        all_ok: report.all_ok(),
        first_violation: report.first_violation.as_ref().map(ViolationJson::from),
    };
    Ok(Output {
        stdout: to_json(&json),
        stderr: warnings(u),
        code: if report.all_ok() { EXIT_OK } else { EXIT_FAILED },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimFormat {
    Ascii,
    Json,
}

#[derive(Serialize)]
struct SimulateJson {
    steps: usize,
    states: Vec<PotentialJson>,
}

pub fn cmd_simulate(u: &Potential, steps: usize, format: SimFormat) -> Output {
    let states = evolve(u, steps);
    let stdout = match format {
        SimFormat::Ascii => render_timeline(&states),
        SimFormat::Json => {
            to_json(&SimulateJson { steps, states: states.iter().map(PotentialJson::from_potential).collect() })
        }
    };
    Output { stderr: warnings(u), ..Output::ok(stdout) }
}
