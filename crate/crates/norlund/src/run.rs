use std::fs::File;
use std::io::{self, BufWriter, Write};

use norlund_core::density::{DensityEngine, DensityMethod};
use norlund_core::exact::{
    bernoulli_numbers, modified_norlund, modified_norlund_poly, norlund_table, Rational,
};
use norlund_core::hyper::rho_closed_form;
use norlund_core::verify::{
    run_identity, run_suite, ChebyshevIdentity, Overrides, VerifyContext, IDENTITY_IDS,
};

use crate::cli::{
    Cli, Command, ComputeArgs, ComputeKind, DensityArgs, IdentityKind, TableArgs, VerifyArgs,
};
use crate::output::{render_reports, Cell, Table};

/// Largest index accepted by `compute`.
pub const COMPUTE_N_MAX: u32 = 200;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] norlund_core::Error),
    #[error("io: {0}")]
    Io(#[from] io::Error),
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// Some identity check failed.
    Failed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Failed => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses the tolerance multiplier; `None` means the default 1.
pub fn tolerance_scale(raw: Option<&str>) -> Result<f64, CliError> {
    match raw {
        None => Ok(1.0),
        Some(s) => match s.trim().parse::<f64>() {
            Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
            _ => Err(usage(format!(
                "{} must be a positive number, got '{s}'",
                crate::TOLERANCE_ENV
            ))),
        },
    }
}

/// Runs the parsed command. `tolerance_env` is the raw value of
/// NORLUND_TOLERANCE_SCALE, if set.
pub fn execute(cli: &Cli, tolerance_env: Option<&str>) -> Result<Outcome, CliError> {
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let outcome = match &cli.command {
        Command::Compute(args) => {
            compute(args)?.render(cli.format, &mut sink)?;
            Outcome::Success
        }
        Command::Density(args) => {
            density(args)?.render(cli.format, &mut sink)?;
            Outcome::Success
        }
        Command::Table(args) => {
            table(args)?.render(cli.format, &mut sink)?;
            Outcome::Success
        }
        Command::Verify(args) => {
            if args.list {
                let mut t = Table::new(&["identity_id"]);
                for id in IDENTITY_IDS {
                    t.push(vec![Cell::Text(id.to_string())]);
                }
                t.render(cli.format, &mut sink)?;
                Outcome::Success
            } else {
                let ctx = VerifyContext::new(tolerance_scale(tolerance_env)?);
                let reports = verify(args, &ctx)?;
                render_reports(&reports, cli.format, &mut sink)?;
                if reports.iter().all(|r| r.passed) {
                    Outcome::Success
                } else {
                    Outcome::Failed
                }
            }
        }
    };
    sink.flush()?;
    Ok(outcome)
}

fn compute(args: &ComputeArgs) -> Result<Table, CliError> {
    if args.n > COMPUTE_N_MAX {
        return Err(usage(format!("--n must be at most {COMPUTE_N_MAX}")));
    }
    let mut t = Table::new(&["n", "value"]);
    let row = |k: u32, v: String| vec![Cell::Int(k.into()), Cell::Text(v)];
    match args.kind {
        ComputeKind::Bernoulli => {
            for (k, b) in bernoulli_numbers(args.n).iter().enumerate() {
                t.push(row(k as u32, b.to_string()));
            }
        }
        ComputeKind::Norlund => {
            let alpha = match &args.alpha {
                Some(a) => Some(a.parse::<Rational>().map_err(|_| {
                    usage(format!("--alpha must be a rational p or p/q, got '{a}'"))
                })?),
                None => None,
            };
            for (k, p) in norlund_table(args.n).iter().enumerate() {
                let v = match &alpha {
                    Some(a) => p.eval(a).to_string(),
                    None => p.to_string(),
                };
                t.push(row(k as u32, v));
            }
        }
        ComputeKind::Modified => {
            if args.n == 0 {
                return Err(usage("modified values start at n = 1"));
            }
            for k in 1..=args.n {
                let v = match args.ell {
                    Some(ell) => {
                        modified_norlund(k, &Rational::from_integer(ell.into())).to_string()
                    }
                    None => modified_norlund_poly(k).to_string(),
                };
                t.push(row(k, v));
            }
        }
    }
    Ok(t)
}

fn density(args: &DensityArgs) -> Result<Table, CliError> {
    if args.dump_expr {
        let mut t = Table::new(&["ell", "expression"]);
        t.push(vec![
            Cell::Int(args.ell.into()),
            Cell::Text(rho_closed_form(args.ell)?.to_string()),
        ]);
        return Ok(t);
    }
    let method: DensityMethod = args.method.parse()?;
    let engine = DensityEngine::new(args.ell.max(1))?;
    let mut t = Table::new(&["ell", "x", "method", "value", "error_estimate"]);
    for &x in &args.x {
        let v = engine.density(args.ell, x, method)?;
        t.push(vec![
            Cell::Int(args.ell.into()),
            Cell::Float(x),
            Cell::Text(method.to_string()),
            Cell::Float(v.value),
            v.error_estimate.map_or(Cell::Empty, Cell::Float),
        ]);
    }
    Ok(t)
}

fn table(args: &TableArgs) -> Result<Table, CliError> {
    if args.ell_max == 0 || args.ell_max > 8 {
        return Err(usage("--ell-max must be between 1 and 8"));
    }
    if args.step.is_nan()
        || args.step <= 0.0
        || args.x_max.is_nan()
        || args.x_min.is_nan()
        || args.x_max < args.x_min
    {
        return Err(usage("need --step > 0 and --x-max >= --x-min"));
    }
    let count = ((args.x_max - args.x_min) / args.step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return Err(usage("grid too large (more than 100000 rows)"));
    }
    let engine = DensityEngine::new(args.ell_max)?;
    let names: Vec<String> = (1..=args.ell_max).map(|l| format!("rho_{l}")).collect();
    let mut header = vec!["x"];
    header.extend(names.iter().map(String::as_str));
    let mut t = Table::new(&header);
    for i in 0..count {
        let x = args.x_min + i as f64 * args.step;
        let mut row = vec![Cell::Float(x)];
        for ell in 1..=args.ell_max {
            row.push(Cell::Float(engine.rho(ell, x)?));
        }
        t.push(row);
    }
    Ok(t)
}

fn verify(
    args: &VerifyArgs,
    ctx: &VerifyContext,
) -> Result<Vec<norlund_core::verify::VerificationReport>, CliError> {
    if let Some(suite) = &args.suite {
        if suite != "all" {
            return Err(usage(format!(
                "unknown suite '{suite}' (only 'all' is defined)"
            )));
        }
        return Ok(run_suite(ctx));
    }
    if args.id.is_empty() {
        return Err(usage("give --suite all or at least one --id"));
    }
    if let Some(bad) = args
        .id
        .iter()
        .find(|id| !IDENTITY_IDS.contains(&id.as_str()))
    {
        return Err(usage(format!(
            "unknown identity id '{bad}'; see `verify --list`"
        )));
    }
    let overrides = Overrides {
        ell: args.ell,
        x: args.x.clone(),
        n: args.n,
        p: args.p,
        identity: args.identity.map(|k| match k {
            IdentityKind::First => ChebyshevIdentity::First,
            IdentityKind::Second => ChebyshevIdentity::Second,
        }),
        a: args.a.clone(),
        b: args.b,
        z: args.z.clone(),
    };
    let mut reports = Vec::new();
    for id in &args.id {
        reports.extend(run_identity(ctx, id, &overrides)?);
    }
    Ok(reports)
}
