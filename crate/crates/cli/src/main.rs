//! Command-line front end: inversion, characteristic polynomials,
//! representation determinants, matrix dumps, and self-verification runs.
//!
//! Exit codes: 0 success, 1 parse/usage error (and failed verification),
//! 2 mathematical singularity (no inverse exists).

use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use clifford_fvs::{
    bareiss_det, fvs_run, parse, pi, rep_determinant, ExtendedBasis, FvsResult, Multivector,
    Rational, RepMatrix, Scalar, Signature, StepMode,
};

#[derive(Parser)]
#[command(
    name = "clifford-fvs",
    about = "Exact multivector inverses and characteristic polynomials in Cl(p,q)",
    version
)]
struct Cli {
    /// Algebra signature as `p,q` (p generators squaring to +1, q to -1)
    #[arg(long, global = true, value_name = "p,q")]
    signature: Option<String>,

    /// Step-count policy; `inverse`/`charpoly`/`det`/`verify` default to
    /// `reduced`, `matrep` defaults to `full`
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,

    /// Scalar field for coefficients
    #[arg(long, global = true, value_enum, default_value_t = ScalarArg::Rational)]
    scalar: ScalarArg,

    /// Emit a JSON object instead of plain text
    #[arg(long, global = true)]
    json: bool,

    /// Print the per-step t/m lines of the recursion
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    Bott,
    Reduced,
}

impl ModeArg {
    fn step_mode(self) -> StepMode {
        match self {
            ModeArg::Full => StepMode::Full,
            ModeArg::Bott => StepMode::Bott,
            ModeArg::Reduced => StepMode::SpanReduced,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ModeArg::Full => "full",
            ModeArg::Bott => "bott",
            ModeArg::Reduced => "reduced",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScalarArg {
    Rational,
    F64,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the multivector inverse (and characteristic polynomial)
    Inverse { expr: String },
    /// Compute the monic characteristic polynomial
    Charpoly { expr: String },
    /// Compute the representation determinant
    Det { expr: String },
    /// Dump the representation matrix over the chosen basis
    Matrep { expr: String },
    /// Cross-check the result against the matrix representation oracle
    Verify { expr: String },
}

impl Command {
    fn expr(&self) -> &str {
        match self {
            Command::Inverse { expr }
            | Command::Charpoly { expr }
            | Command::Det { expr }
            | Command::Matrep { expr }
            | Command::Verify { expr } => expr,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Inverse { .. } => "inverse",
            Command::Charpoly { .. } => "charpoly",
            Command::Det { .. } => "det",
            Command::Matrep { .. } => "matrep",
            Command::Verify { .. } => "verify",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let code = match cli.scalar {
        ScalarArg::Rational => run::<Rational>(&cli),
        ScalarArg::F64 => run::<f64>(&cli),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    1
}

fn run<S: Scalar>(cli: &Cli) -> u8 {
    let Some(sig_text) = cli.signature.as_deref() else {
        return usage_error("--signature p,q is required");
    };
    let sig = match parse_signature(sig_text) {
        Ok(sig) => sig,
        Err(msg) => return usage_error(&msg),
    };

    let raw = cli.command.expr();
    let stdin_text;
    let expr = if raw == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            return usage_error(&format!("cannot read standard input: {e}"));
        }
        stdin_text = buf;
        stdin_text.trim()
    } else {
        raw
    };

    let a: Multivector<S> = match parse(expr, sig) {
        Ok(a) => a,
        Err(e) => return usage_error(&format!("cannot parse expression: {e}")),
    };

    let mode = cli.mode.unwrap_or(match cli.command {
        Command::Matrep { .. } => ModeArg::Full,
        _ => ModeArg::Reduced,
    });

    let out = Output::new(cli, sig, mode);
    match &cli.command {
        Command::Inverse { .. } => cmd_inverse(out, &a, mode),
        Command::Charpoly { .. } => cmd_charpoly(out, &a, mode),
        Command::Det { .. } => cmd_det(out, &a, mode),
        Command::Matrep { .. } => cmd_matrep(out, &a, mode),
        Command::Verify { .. } => cmd_verify(out, &a, mode),
    }
}

/// Collects plain-text lines and the JSON result object, then prints
/// whichever rendering was requested.
struct Output {
    json: bool,
    trace: bool,
    header: Value,
    lines: Vec<String>,
}

impl Output {
    fn new(cli: &Cli, sig: Signature, mode: ModeArg) -> Self {
        let scalar = match cli.scalar {
            ScalarArg::Rational => "rational",
            ScalarArg::F64 => "f64",
        };
        Output {
            json: cli.json,
            trace: cli.trace,
            header: json!({
                "command": cli.command.name(),
                "signature": format!("{},{}", sig.p(), sig.q()),
                "mode": mode.name(),
                "scalar": scalar,
            }),
            lines: Vec::new(),
        }
    }

    fn line(&mut self, text: String) {
        self.lines.push(text);
    }

    fn trace_lines<S: Scalar>(&mut self, run: &FvsResult<S>) {
        let Some(iterates) = &run.iterates else {
            return;
        };
        let mut lines = Vec::new();
        for (i, (c, k)) in iterates.iter().enumerate() {
            lines.push(format!("t_{}= {} , m_{}= {}", i + 1, c, i + 1, k));
        }
        if self.json {
            let obj = self.header.as_object_mut().unwrap();
            obj.insert("trace".into(), Value::from(lines));
        } else {
            self.lines.extend(lines);
        }
    }

    fn finish(mut self, result: Value) {
        if self.json {
            let obj = self.header.as_object_mut().unwrap();
            obj.insert("result".into(), result);
            println!("{}", serde_json::to_string_pretty(&self.header).unwrap());
        } else {
            for line in &self.lines {
                println!("{line}");
            }
        }
    }
}

fn parse_signature(text: &str) -> Result<Signature, String> {
    let parts: Vec<&str> = text.split(',').collect();
    let [p, q] = parts.as_slice() else {
        return Err(format!("signature must be `p,q`, got `{text}`"));
    };
    let p: u32 = p
        .trim()
        .parse()
        .map_err(|_| format!("signature component `{p}` is not a number"))?;
    let q: u32 = q
        .trim()
        .parse()
        .map_err(|_| format!("signature component `{q}` is not a number"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

fn scalar_strings<S: Scalar>(values: &[S]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

/// Monic polynomial in `v`, highest degree first, zero terms elided.
fn render_poly<S: Scalar>(coeffs: &[S]) -> String {
    let degree = coeffs.len() - 1;
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let d = degree - k;
        let negative = c.is_negative();
        let abs = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let show_coeff = d == 0 || abs != S::one();
        if show_coeff {
            out.push_str(&abs.to_string());
        }
        if d > 0 {
            if show_coeff {
                out.push('*');
            }
            out.push('v');
            if d > 1 {
                out.push_str(&format!("^{d}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn monic_poly<S: Scalar>(run: &FvsResult<S>) -> Vec<S> {
    let mut poly = Vec::with_capacity(run.coeffs.len() + 1);
    poly.push(S::one());
    poly.extend(run.coeffs.iter().cloned());
    poly
}

fn cmd_inverse<S: Scalar>(mut out: Output, a: &Multivector<S>, mode: ModeArg) -> u8 {
    let run = match fvs_run(a, mode.step_mode(), out.trace) {
        Ok(run) => run,
        Err(e) => return usage_error(&e.to_string()),
    };
    out.trace_lines(&run);
    let poly = monic_poly(&run);
    let result = json!({
        "inverse": run.inverse.as_ref().map(|inv| inv.to_string()),
        "charpoly": scalar_strings(&poly),
        "steps": run.steps_run,
        "singular": run.singular,
    });
    if run.singular {
        out.finish(result);
        eprintln!("inverse does not exist: c_N = 0");
        return 2;
    }
    out.line(run.inverse.as_ref().unwrap().to_string());
    out.finish(result);
    0
}

fn cmd_charpoly<S: Scalar>(mut out: Output, a: &Multivector<S>, mode: ModeArg) -> u8 {
    let run = match fvs_run(a, mode.step_mode(), out.trace) {
        Ok(run) => run,
        Err(e) => return usage_error(&e.to_string()),
    };
    out.trace_lines(&run);
    let poly = monic_poly(&run);
    out.line(render_poly(&poly));
    let result = json!({
        "degree": poly.len() - 1,
        "coeffs": scalar_strings(&poly),
    });
    out.finish(result);
    0
}

fn cmd_det<S: Scalar>(mut out: Output, a: &Multivector<S>, mode: ModeArg) -> u8 {
    let det = match rep_determinant(a, mode.step_mode()) {
        Ok(det) => det,
        Err(e) => return usage_error(&e.to_string()),
    };
    out.line(det.to_string());
    out.finish(Value::from(det.to_string()));
    0
}

/// Basis for the matrix-representation commands: the span subalgebra in
/// reduced mode, the whole algebra otherwise (and always for inputs with an
/// empty span, where no span basis exists).
fn matrep_basis<S: Scalar>(a: &Multivector<S>, mode: ModeArg) -> ExtendedBasis {
    if mode == ModeArg::Reduced && !a.span().is_empty() {
        ExtendedBasis::span_of(a).expect("span is nonempty")
    } else {
        ExtendedBasis::full(a.signature()).expect("signature has generators")
    }
}

fn cmd_matrep<S: Scalar>(mut out: Output, a: &Multivector<S>, mode: ModeArg) -> u8 {
    let basis = matrep_basis(a, mode);
    let img = match pi(a, &basis) {
        Ok(img) => img,
        Err(e) => return usage_error(&e.to_string()),
    };
    let basis_names: Vec<String> = basis.blades().iter().map(|b| b.to_string()).collect();
    out.line(format!("dim={} basis={}", basis.dim(), basis_names.join(",")));
    let mut rows = Vec::with_capacity(basis.dim());
    for i in 0..img.dim() {
        let row: Vec<String> = (0..img.dim()).map(|j| img.get(i, j).to_string()).collect();
        out.line(row.join(" "));
        rows.push(Value::from(row));
    }
    let result = json!({
        "dim": basis.dim(),
        "basis": basis_names,
        "rows": rows,
    });
    out.finish(result);
    0
}

fn approx_eq<S: Scalar>(a: &S, b: &S, scale: f64) -> bool {
    if S::EXACT {
        a == b
    } else {
        (a.to_f64() - b.to_f64()).abs() <= 1e-6 * scale.abs().max(1.0)
    }
}

fn matrices_close<S: Scalar>(a: &RepMatrix<S>, b: &RepMatrix<S>) -> bool {
    let mut scale = 1.0f64;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            scale = scale.max(a.get(i, j).abs_f64());
        }
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if !approx_eq(a.get(i, j), b.get(i, j), scale) {
                return false;
            }
        }
    }
    true
}

fn cmd_verify<S: Scalar>(mut out: Output, a: &Multivector<S>, mode: ModeArg) -> u8 {
    let sig = a.signature();
    let mut checks: Vec<(String, bool)> = Vec::new();
    let run = match fvs_run(a, mode.step_mode(), false) {
        Ok(run) => run,
        Err(e) => return usage_error(&e.to_string()),
    };

    // oracle data over the span (or full, for scalar input) basis
    let basis = matrep_basis(a, ModeArg::Reduced);
    let img = match pi(a, &basis) {
        Ok(img) => img,
        Err(e) => return usage_error(&e.to_string()),
    };
    let oracle_det = bareiss_det(&img);

    if run.singular {
        checks.push((
            "singular: consistent (oracle det = 0)".to_string(),
            oracle_det.is_zero(),
        ));
    } else {
        let inv = run.inverse.as_ref().unwrap();
        let one = Multivector::one(sig);
        let ok = if S::EXACT {
            a.mul(inv) == one && inv.mul(a) == one
        } else {
            let bound = 1e-9 * a.inf_norm() * inv.inf_norm();
            a.mul(inv).sub(&one).inf_norm() <= bound && inv.mul(a).sub(&one).inf_norm() <= bound
        };
        checks.push(("inverse product A*A^-1 = A^-1*A = 1".to_string(), ok));

        let expected_det = if a.span().is_empty() {
            // pure scalar over the full basis: det(a0 I) = a0^dim
            let mut pow = S::one();
            for _ in 0..basis.dim() {
                pow = pow * a.scalar_part();
            }
            Ok(pow)
        } else {
            rep_determinant(a, StepMode::Full)
        };
        match expected_det {
            Ok(expected) => checks.push((
                "oracle determinant det(pi(A)) matches full-mode c_N".to_string(),
                approx_eq(&expected, &oracle_det, oracle_det.abs_f64()),
            )),
            Err(e) => return usage_error(&e.to_string()),
        }
    }

    // homomorphism spot-check on the input itself
    let sq = match pi(&a.mul(a), &basis) {
        Ok(sq) => sq,
        Err(e) => return usage_error(&e.to_string()),
    };
    checks.push((
        "homomorphism pi(A*A) = pi(A)^2".to_string(),
        matrices_close(&sq, &img.mul(&img)),
    ));

    let expected_trace = S::from_int(basis.dim() as i64) * a.scalar_part();
    checks.push((
        "trace identity tr pi(A) = dim * <A>_0".to_string(),
        approx_eq(&img.trace(), &expected_trace, expected_trace.abs_f64()),
    ));

    let all_pass = checks.iter().all(|(_, ok)| *ok);
    let mut json_checks = Vec::new();
    for (name, ok) in &checks {
        let status = if *ok { "PASS" } else { "FAIL" };
        out.line(format!("{name}: {status}"));
        json_checks.push(json!({ "name": name, "status": status }));
    }
    out.finish(json!({ "checks": json_checks, "pass": all_pass }));
    if all_pass {
        0
    } else {
        1
    }
}
