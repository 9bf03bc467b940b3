use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qdirac::expr::{parse_op, parse_poly, parse_scalar, parse_value, Format, Value};
use qdirac::fischer::{self, DecompositionKind, DecompositionResult};
use qdirac::ops::named::{dirac_r, laplacian_r};
use qdirac::qclifford::CliffordPolynomial;
use qdirac::scalars::{GaussRat, ScalarQ};
use qdirac::verifier::{registry, run_suite, SuiteConfig};
use qdirac::Error;

const N_MAX: usize = 4;
const N_MAX_CLIFFORD: usize = 3;
const DEG_MAX: u32 = 6;
const DEG_MAX_CLIFFORD: u32 = 4;

#[derive(Parser)]
#[command(name = "qdirac", version, about = "Exact Clifford analysis on quantum Euclidean space")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Dimension (number of variables).
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest degree considered.
    #[arg(long, global = true)]
    deg_max: Option<u32>,
    /// Lift the dimension and degree envelope.
    #[arg(long, global = true)]
    unsafe_limits: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Latex,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Latex => Format::Latex,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Harmonic,
    Monogenic,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeKind {
    Harmonic,
    /// Monogenic (Fischer) decomposition.
    #[value(alias = "monogenic")]
    Fischer,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an operator expression to a polynomial.
    Apply {
        op: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Test harmonicity or monogenicity, degree by degree.
    Check {
        kind: CheckKind,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Decompose a homogeneous polynomial.
    Decompose {
        kind: DecomposeKind,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Fischer inner product of two homogeneous polynomials.
    Inner {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
    /// Run the relation suite.
    Verify {
        /// Relation or family names; empty with --all runs everything.
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        n_max: Option<usize>,
        /// Random pairs per dimension for product rules.
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long)]
        timing: bool,
        /// List the registered relations and exit.
        #[arg(long)]
        list: bool,
    },
    /// Kernel dimensions of the Laplace and Dirac operators.
    Dims {
        /// Also compute monogenic dimensions.
        #[arg(long)]
        clifford: bool,
    },
    /// Normalize an expression, optionally specializing s or q.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Value of s.
        #[arg(long, conflicts_with = "at_q")]
        at: Option<String>,
        /// Value of q (even powers of s only).
        #[arg(long)]
        at_q: Option<String>,
    },
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Inconsistent(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

struct Ctx {
    g: Global,
    stdin_used: bool,
}

impl Ctx {
    fn n(&self) -> usize {
        self.g.n.unwrap_or(3)
    }

    fn format(&self) -> Format {
        self.g.format.into()
    }

    fn limit(&self, what: String) -> Result<(), Failure> {
        if self.g.unsafe_limits {
            Ok(())
        } else {
            Err(Error::LimitExceeded(what).into())
        }
    }

    fn check_n(&self, n: usize, clifford: bool) -> Result<(), Failure> {
        if n == 0 {
            return Err(Failure::Usage("dimension must be at least 1".into()));
        }
        let cap = if clifford { N_MAX_CLIFFORD } else { N_MAX };
        if n > cap {
            self.limit(format!("n = {n} exceeds {cap}"))?;
        }
        Ok(())
    }

    fn check_poly(&self, p: &CliffordPolynomial) -> Result<(), Failure> {
        let clifford = !p.is_scalar_valued() || p.deformation().is_some();
        self.check_n(p.dim(), clifford)?;
        let cap = self.g.deg_max.unwrap_or(if clifford { DEG_MAX_CLIFFORD } else { DEG_MAX });
        let top = p.graded_parts().last().map_or(0, |(d, _)| *d);
        let envelope = if clifford { DEG_MAX_CLIFFORD } else { DEG_MAX };
        if top > cap {
            return Err(Failure::Usage(format!("degree {top} exceeds --deg-max {cap}")));
        }
        if top > envelope {
            self.limit(format!("degree {top} exceeds {envelope}"))?;
        }
        Ok(())
    }

    /// Argument text, with `-` read from stdin once.
    fn input(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin_used {
            return Err(Failure::Usage("stdin (`-`) can only be used once".into()));
        }
        self.stdin_used = true;
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    }

    fn poly(&mut self, arg: &str) -> Result<CliffordPolynomial, Failure> {
        let text = self.input(arg)?;
        let p = parse_poly(&text, self.n())?;
        self.check_poly(&p)?;
        Ok(p)
    }
}

fn render_poly(p: &CliffordPolynomial, f: Format) -> String {
    Value::Poly(p.clone()).render(f)
}

fn poly_json(p: &CliffordPolynomial) -> serde_json::Value {
    Value::Poly(p.clone()).to_json()
}

fn cmd_apply(ctx: &mut Ctx, op: &str, poly: &str) -> Outcome {
    let op_text = ctx.input(op)?;
    let op = parse_op(&op_text, ctx.n())?;
    let p = ctx.poly(poly)?;
    let image = op.apply(&p)?;
    Ok((render_poly(&image, ctx.format()), true))
}

fn cmd_check(ctx: &mut Ctx, kind: CheckKind, poly: &str) -> Outcome {
    let p = ctx.poly(poly)?;
    let n = p.dim();
    let (label, op) = match kind {
        CheckKind::Harmonic => ("harmonic", laplacian_r(n)),
        CheckKind::Monogenic => ("monogenic", dirac_r(n)),
    };
    let mut parts = Vec::new();
    for (d, part) in p.graded_parts() {
        let residual = op.apply(&part)?;
        parts.push((d, residual));
    }
    let holds = parts.iter().all(|(_, r)| r.is_zero());
    let f = ctx.format();
    let out = match f {
        Format::Json => json!({
            "kind": label,
            "n": n,
            "holds": holds,
            "parts": parts.iter().map(|(d, r)| json!({
                "degree": d,
                "holds": r.is_zero(),
                "residual": if r.is_zero() { serde_json::Value::Null } else { poly_json(r) },
            })).collect::<Vec<_>>(),
        })
        .to_string(),
        _ => {
            let word = |b: bool| if b { "yes" } else { "no" };
            let mut lines = vec![format!("{label}: {}", word(holds))];
            if parts.len() > 1 || !holds {
                for (d, r) in &parts {
                    let mut line = format!("  degree {d}: {}", word(r.is_zero()));
                    if !r.is_zero() {
                        line.push_str(&format!(", residual {}", render_poly(r, f)));
                    }
                    lines.push(line);
                }
            }
            lines.join("\n")
        }
    };
    Ok((out, holds))
}

fn decomposition_text(d: &DecompositionResult, f: Format) -> String {
    let (raise, label) = match d.kind {
        DecompositionKind::Harmonic => ("Q", "harmonic"),
        DecompositionKind::Monogenic => ("LxQ", "monogenic"),
    };
    let mut lines = vec![format!("{label} decomposition, degree {}, verified {}", d.degree, d.verified)];
    for l in &d.levels {
        let body = render_poly(&l.component, f);
        let line = match (l.level, f) {
            (0, _) => body,
            (j, Format::Latex) => format!("{}^{{{j}}}\\left({body}\\right)", if raise == "Q" { "Q" } else { "{}^L\\underline{x}" }),
            (1, _) => format!("{raise} * ({body})"),
            (j, _) => format!("{raise}^{j} * ({body})"),
        };
        lines.push(format!("  level {}: {line}", l.level));
    }
    lines.join("\n")
}

fn cmd_decompose(ctx: &mut Ctx, kind: DecomposeKind, poly: &str) -> Outcome {
    let p = ctx.poly(poly)?;
    let k = match p.homogeneous_degree() {
        Some(k) => k,
        None if p.is_zero() => 0,
        None => return Err(Error::NotHomogeneous.into()),
    };
    let d = match kind {
        DecomposeKind::Harmonic => {
            let sp = p
                .to_qpoly()
                .ok_or_else(|| Failure::Usage("harmonic decomposition needs a scalar-valued polynomial".into()))?;
            fischer::harmonic_decompose(&sp, k)?
        }
        DecomposeKind::Fischer => {
            ctx.check_n(p.dim(), true)?;
            if k > DEG_MAX_CLIFFORD {
                ctx.limit(format!("degree {k} exceeds {DEG_MAX_CLIFFORD} for Clifford-valued input"))?;
            }
            fischer::monogenic_decompose(&p, k)?
        }
    };
    let out = match ctx.format() {
        Format::Json => serde_json::to_string(&d).expect("serializable"),
        f => decomposition_text(&d, f),
    };
    Ok((out, d.verified))
}

fn cmd_inner(ctx: &mut Ctx, p1: &str, p2: &str) -> Outcome {
    let a = ctx.poly(p1)?;
    let b = ctx.poly(p2)?;
    let k = a.homogeneous_degree().or(b.homogeneous_degree()).unwrap_or(0);
    let closed = fischer::fischer_inner(&a, &b, k)?;
    let oper = fischer::fischer_inner_operational(&a, &b, k)?;
    let agrees = closed == oper;
    if !agrees {
        return Err(Failure::Verification(format!(
            "closed form {} and operational form {} disagree",
            closed.clifford_value, oper.clifford_value
        )));
    }
    let out = match ctx.format() {
        Format::Json => json!({
            "k": k,
            "clifford_value": closed.clifford_value.to_string(),
            "scalar_value": closed.scalar_value,
            "operational_agrees": agrees,
        })
        .to_string(),
        Format::Latex => format!("{}", closed.scalar_value.to_latex()),
        Format::Text => {
            if closed.clifford_value.is_zero() || closed.clifford_value.terms().all(|(b, _)| b.is_empty()) {
                closed.scalar_value.to_text()
            } else {
                format!("{}\nscalar part: {}", closed.clifford_value, closed.scalar_value)
            }
        }
    };
    Ok((out, true))
}

struct VerifyArgs<'a> {
    names: &'a [String],
    all: bool,
    n_max: Option<usize>,
    pairs: usize,
    timing: bool,
    list: bool,
}

fn cmd_verify(ctx: &Ctx, a: VerifyArgs) -> Outcome {
    if a.list {
        let reg = registry();
        let out = match ctx.format() {
            Format::Json => serde_json::Value::Array(
                reg.iter()
                    .map(|s| json!({"name": s.name, "family": s.family, "role": s.role, "description": s.description}))
                    .collect(),
            )
            .to_string(),
            _ => reg.iter().map(|s| format!("{:<28} {}", s.name, s.description)).collect::<Vec<_>>().join("\n"),
        };
        return Ok((out, true));
    }
    if a.names.is_empty() && !a.all {
        return Err(Failure::Usage("name at least one relation or pass --all".into()));
    }
    let mut config = SuiteConfig {
        seed: ctx.g.seed,
        pairs: a.pairs,
        timing: a.timing,
        unsafe_limits: ctx.g.unsafe_limits,
        ..SuiteConfig::default()
    };
    match (ctx.g.n, a.n_max) {
        (Some(n), None) => {
            config.n_min = n;
            config.n_max = n;
        }
        (n_min, Some(m)) => {
            config.n_min = n_min.unwrap_or(1);
            config.n_max = m;
        }
        (None, None) => {}
    }
    if let Some(k) = ctx.g.deg_max {
        config.k_max = k;
    }
    if config.n_min == 0 || config.n_min > config.n_max {
        return Err(Failure::Usage(format!("empty dimension range {}..{}", config.n_min, config.n_max)));
    }
    ctx.check_n(config.n_max, false)?;
    if config.k_max > DEG_MAX {
        ctx.limit(format!("degree {} exceeds {DEG_MAX}", config.k_max))?;
    }
    let names: &[String] = if a.all { &[] } else { a.names };
    let report = run_suite(names, &config)?;
    let out = match ctx.format() {
        Format::Json => serde_json::to_string(&report).expect("serializable"),
        _ => report.to_text().trim_end().to_string(),
    };
    Ok((out, report.all_ok()))
}

fn cmd_dims(ctx: &Ctx, clifford: bool) -> Outcome {
    let n = ctx.n();
    ctx.check_n(n, clifford)?;
    let envelope = if clifford { DEG_MAX_CLIFFORD } else { DEG_MAX };
    let k_max = ctx.g.deg_max.unwrap_or(envelope);
    if k_max > envelope {
        ctx.limit(format!("degree {k_max} exceeds {envelope}"))?;
    }
    let rows = (0..=k_max).map(|k| fischer::dims(n, k, clifford)).collect::<Result<Vec<_>, _>>()?;
    let ok = rows
        .iter()
        .all(|d| d.dim_h == d.dim_h_expected && d.dim_m.map_or(true, |m| m == d.dim_m_expected));
    let out = match ctx.format() {
        Format::Json => serde_json::to_string(&rows).expect("serializable"),
        _ => {
            let mut lines = vec![format!("{:>2} {:>2} {:>6} {:>6} {:>9} {:>6} {:>9}", "n", "k", "dim P", "dim H", "expected", "dim M", "expected")];
            for d in &rows {
                let m = d.dim_m.map_or("-".to_string(), |m| m.to_string());
                let me = if d.dim_m.is_some() { d.dim_m_expected.to_string() } else { "-".into() };
                lines.push(format!(
                    "{:>2} {:>2} {:>6} {:>6} {:>9} {:>6} {:>9}",
                    d.n, d.k, d.dim_p, d.dim_h, d.dim_h_expected, m, me
                ));
            }
            lines.join("\n")
        }
    };
    Ok((out, ok))
}

fn numeric(text: &str) -> Result<GaussRat, Failure> {
    parse_scalar(text)?
        .as_constant()
        .ok_or_else(|| Failure::Usage(format!("`{text}` is not a numeric constant")))
}

fn cmd_eval(ctx: &mut Ctx, expr: &str, at: Option<&str>, at_q: Option<&str>) -> Outcome {
    let text = ctx.input(expr)?;
    let v = parse_value(&text, ctx.n())?;
    if let Value::Poly(p) = &v {
        ctx.check_poly(p)?;
    }
    let point = match (at, at_q) {
        (Some(s), _) => Some((numeric(s)?, false)),
        (None, Some(q)) => Some((numeric(q)?, true)),
        (None, None) => None,
    };
    let Some((x, in_q)) = point else {
        return Ok((v.render(ctx.format()), true));
    };
    let special = |c: &ScalarQ| -> Result<ScalarQ, Failure> {
        let g = if in_q { c.eval_at_q(&x)? } else { c.eval_at(&x)? };
        Ok(ScalarQ::from_gauss(g))
    };
    let out = match v {
        Value::Scalar(c) => Value::Scalar(special(&c)?),
        Value::Poly(p) => {
            let mut err = None;
            let mapped = p.map_terms(|m, b, c| match special(c) {
                Ok(v) => Ok(Some((m.clone(), b, v))),
                Err(e) => {
                    err.get_or_insert(e);
                    Ok(None)
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
            Value::Poly(mapped)
        }
        Value::Op(_) => return Err(Failure::Usage("operators cannot be specialized numerically".into())),
    };
    Ok((out.render(ctx.format()), true))
}

fn run(cli: Cli) -> Outcome {
    if let Some(t) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let mut ctx = Ctx {
        g: cli.global,
        stdin_used: false,
    };
    if let Some(n) = ctx.g.n {
        ctx.check_n(n, false)?;
    }
    match &cli.command {
        Command::Apply { op, poly } => cmd_apply(&mut ctx, op, poly),
        Command::Check { kind, poly } => cmd_check(&mut ctx, *kind, poly),
        Command::Decompose { kind, poly } => cmd_decompose(&mut ctx, *kind, poly),
        Command::Inner { p1, p2 } => cmd_inner(&mut ctx, p1, p2),
        Command::Verify {
            names,
            all,
            n_max,
            pairs,
            timing,
            list,
        } => cmd_verify(
            &ctx,
            VerifyArgs {
                names,
                all: *all,
                n_max: *n_max,
                pairs: *pairs,
                timing: *timing,
                list: *list,
            },
        ),
        Command::Dims { clifford } => cmd_dims(&ctx, *clifford),
        Command::Eval { expr, at, at_q } => cmd_eval(&mut ctx, expr, at.as_deref(), at_q.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli) {
        Ok((out, pass)) => {
            println!("{out}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
