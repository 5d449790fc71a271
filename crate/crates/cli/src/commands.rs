use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use catqm::gen::Gen;
use catqm::laws::{run_suite, SuiteReport};
use catqm::protocols::{
    bell_maps, cnot_equations, inline, make_bell_base, rel_teleportation_search, standard_cnot,
    verify_cnot_teleportation, verify_entanglement_swap, verify_gate_teleportation, verify_teleportation,
    ProtocolReport, TeleportationBase,
};
use catqm::qm::{self, dim_scalar, parse_state, BornReport, SpectralDecomposition};
use catqm::{Boolean, ComplexRootTwo, Error, Morphism, Scalar, SemiringKind, Shape};

use crate::Format;

/// A finished command: its text and JSON renderings and whether every check
/// held.
pub struct Report {
    text: String,
    json: Value,
    pub ok: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut body = self.json.clone();
                if let Value::Object(map) = &mut body {
                    map.insert("schema".into(), json!(1));
                }
                let mut out = serde_json::to_string_pretty(&body).expect("plain data");
                out.push('\n');
                out
            }
        }
    }
}

/// Error with its process exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unsupported(_) => 2,
            Error::ShapeMismatch { .. } => 3,
            Error::Parse { .. } => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<Report, Failure>;

macro_rules! with_semiring {
    ($kind:expr, $f:ident($($arg:expr),*)) => {
        match $kind {
            SemiringKind::Boolean => $f::<Boolean>($($arg),*),
            SemiringKind::ComplexRootTwo => $f::<ComplexRootTwo>($($arg),*),
        }
    };
}

pub fn lemmas(kind: SemiringKind, seed: u64, count: usize) -> Outcome {
    Ok(with_semiring!(kind, lemmas_for(seed, count)))
}

fn lemmas_for<S: Scalar>(seed: u64, count: usize) -> Report {
    let report: SuiteReport = run_suite::<S>(seed, count);
    let mut text = format!(
        "law suite over {}, seed {}, {} cases per law\n",
        report.semiring, report.seed, report.count
    );
    let width = report.laws.iter().map(|l| l.name.len()).max().unwrap_or(0);
    for law in &report.laws {
        let mark = if law.ok() { "ok" } else { "FAILED" };
        let _ = writeln!(text, "  {:width$}  {}/{} {mark}", law.name, law.passed, law.cases);
        if let Some(cx) = &law.counterexample {
            for line in cx.lines() {
                let _ = writeln!(text, "      {line}");
            }
        }
    }
    if report.vacuous {
        text.push_str("vacuous: no cases were run, so every law holds trivially\n");
    }
    let _ = writeln!(
        text,
        "{}",
        if report.passed {
            "all laws hold"
        } else {
            "some laws fail"
        }
    );
    Report {
        json: serde_json::to_value(&report).expect("plain data"),
        ok: report.passed,
        text,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProtocolKind {
    Teleport,
    GateTeleport,
    CnotTeleport,
    Swap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseChoice {
    /// The Pauli base.
    Bell,
    /// A random base derived from `--seed`.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Gate {
    Identity,
    X,
    Z,
    Xz,
    Hadamard,
}

#[derive(Debug, Args)]
pub struct ProtocolArgs {
    #[arg(value_enum)]
    kind: ProtocolKind,
    #[arg(long, value_enum, default_value_t = BaseChoice::Bell)]
    base: BaseChoice,
    /// Gate for `gate-teleport`.
    #[arg(long, value_enum, default_value_t = Gate::Hadamard)]
    gate: Gate,
    /// Gate matrix in text form, overriding `--gate` (and the CNOT matrix
    /// for `cnot-teleport`).
    #[arg(long)]
    gate_file: Option<PathBuf>,
}

pub fn protocol(kind: SemiringKind, seed: u64, args: &ProtocolArgs) -> Outcome {
    with_semiring!(kind, protocol_for(seed, args))
}

fn named_gate<S: Scalar>(gate: Gate) -> Result<Morphism<S>, Error> {
    let [one, x, z, xz] = bell_maps::<S>()?;
    Ok(match gate {
        Gate::Identity => one,
        Gate::X => x,
        Gate::Z => z,
        Gate::Xz => xz,
        Gate::Hadamard => {
            let s = S::teleport_scalar().ok_or_else(|| Error::Unsupported(format!("{} has no 1/√2", S::NAME)))?;
            x.add(&z)?.scale(&s)
        }
    })
}

fn read_matrix<S: Scalar>(path: &PathBuf) -> Result<Morphism<S>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(Morphism::parse_text(&text)?)
}

fn protocol_for<S: Scalar>(seed: u64, args: &ProtocolArgs) -> Outcome {
    let tb: TeleportationBase<S> = match args.base {
        BaseChoice::Bell => make_bell_base()?,
        BaseChoice::Random => Gen::new(seed).teleportation_base()?,
    };
    let gate_file = args.gate_file.as_ref().map(read_matrix::<S>).transpose()?;
    let mut extra = Vec::new();
    let report = match args.kind {
        ProtocolKind::Teleport => verify_teleportation(&tb)?,
        ProtocolKind::GateTeleport => {
            let f = match gate_file {
                Some(f) => f,
                None => named_gate(args.gate)?,
            };
            verify_gate_teleportation(&tb, &f, None)?
        }
        ProtocolKind::CnotTeleport => {
            let cnot = gate_file.unwrap_or_else(standard_cnot);
            let (assumed, derived) = cnot_equations(&tb, &cnot)?;
            extra.push(("assumed", assumed));
            extra.push(("derived", derived));
            verify_cnot_teleportation(&tb, &cnot)?
        }
        ProtocolKind::Swap => verify_entanglement_swap(&tb)?,
    };
    let mut json = report.to_json();
    let mut text = protocol_text(&report);
    for (label, eqs) in &extra {
        for e in eqs {
            let _ = writeln!(
                text,
                "{label} equation {}: {}",
                e.name,
                if e.holds { "holds" } else { "fails" }
            );
        }
        json[*label] = serde_json::to_value(eqs).expect("plain data");
    }
    Ok(Report {
        ok: report.is_equal() && report.branches.iter().all(|b| b.ok),
        json,
        text,
    })
}

fn protocol_text<S: Scalar>(report: &ProtocolReport<S>) -> String {
    let mut text = format!("protocol {} over {}\n", report.protocol, report.semiring);
    for (k, step) in report.steps.iter().enumerate() {
        let m = &step.morphism;
        let _ = writeln!(text, "step {}: {}: {} -> {}", k + 1, step.label, m.dom(), m.cod());
    }
    for b in &report.branches {
        let _ = writeln!(
            text,
            "branch {}: weight {}, correction {}, {}",
            b.index,
            b.weight,
            inline(&b.correction),
            if b.ok { "ok" } else { "FAILED" }
        );
    }
    let verdict = if report.is_equal() { "equal" } else { "unequal" };
    let _ = writeln!(text, "verdict: {verdict}");
    if let Some((r, c)) = report.first_difference {
        let _ = writeln!(text, "first difference at row {r}, column {c}");
    }
    let _ = write!(text, "lhs:\n{}rhs:\n{}", report.lhs, report.rhs);
    text
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measurement {
    /// The computational basis of the state's shape.
    Standard,
    /// The Bell base on `Q^ * Q`.
    Bell,
}

#[derive(Debug, Args)]
pub struct BornArgs {
    /// `[scalar *] (c1, c2, ...)`, e.g. `s*(1,1)`.
    #[arg(long)]
    state: String,
    #[arg(long, value_enum, default_value_t = Measurement::Standard)]
    measurement: Measurement,
    /// Shape of the state; inferred from the coordinate count if absent.
    #[arg(long)]
    shape: Option<String>,
}

pub fn born(kind: SemiringKind, args: &BornArgs) -> Outcome {
    with_semiring!(kind, born_for(args))
}

fn born_for<S: Scalar>(args: &BornArgs) -> Outcome {
    let shape = match (&args.shape, args.measurement) {
        (Some(text), _) => Some(Shape::parse(text)?),
        (None, Measurement::Bell) => Some(Shape::tensor(&Shape::dual(&Shape::qubit()), &Shape::qubit())),
        (None, Measurement::Standard) => None,
    };
    let psi = parse_state::<S>(&args.state, shape.as_ref())?;
    let (id, sd) = match args.measurement {
        Measurement::Standard => ("standard", SpectralDecomposition::standard(psi.cod())),
        Measurement::Bell => {
            let tb = make_bell_base::<S>()?;
            let u = tb.base().adjoint();
            ("bell", SpectralDecomposition::new(u, vec![Shape::unit(); 4])?)
        }
    };
    let branches = qm::born(&sd, &psi)?;
    let report = BornReport::new(id, &branches);
    let probs: Vec<&str> = report.branches.iter().map(|b| b.probability.as_str()).collect();
    let mut text = format!("born rule: {} measurement of a state on {}\n", id, psi.cod());
    for b in &report.branches {
        let amp = b.amplitude.as_deref().unwrap_or("-");
        let _ = writeln!(
            text,
            "branch {}: amplitude {amp}, probability {}",
            b.branch, b.probability
        );
    }
    let _ = writeln!(text, "probabilities: [{}]", probs.join(", "));
    let _ = writeln!(text, "total: {}", report.total);
    Ok(Report {
        json: json!({
            "semiring": S::NAME,
            "decomposition": report.decomposition,
            "branches": report.branches,
            "total": report.total,
            "sums_to_one": report.sums_to_one,
        }),
        ok: report.sums_to_one,
        text,
    })
}

pub fn rel_search() -> Report {
    let r = rel_teleportation_search();
    let text = format!(
        "{} teleportation bases among {} candidates\n{} unitaries on Q\nsingle-branch teleportation: {}\n",
        r.bases.len(),
        r.candidates,
        r.unitaries_on_q,
        if r.single_branch_ok { "ok" } else { "FAILED" }
    );
    Report {
        json: serde_json::to_value(&r).expect("plain data"),
        ok: r.single_branch_ok,
        text,
    }
}

pub fn dim(kind: SemiringKind, shape: &str) -> Outcome {
    with_semiring!(kind, dim_for(shape))
}

fn dim_for<S: Scalar>(shape: &str) -> Outcome {
    let a = Shape::parse(shape)?;
    let n = qm::dim_int(&a);
    let s = dim_scalar::<S>(&a);
    Ok(Report {
        text: format!("shape {a}\ndim_int = {n}\ndim_scalar = {s}\n"),
        json: json!({
            "semiring": S::NAME,
            "shape": a.to_string(),
            "dim_int": n,
            "dim_scalar": s.to_string(),
        }),
        ok: true,
    })
}
