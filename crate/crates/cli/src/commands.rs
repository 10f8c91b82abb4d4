use std::fmt;

use regdist::enumerate::{visit_restricted, Restriction, DEFAULT_BOUND};
use regdist::qseries::{gf_regular_distinct, gf_regular_regular, gf_theorem9};
use regdist::{Bijection, BijectionConfig, Error, Execution, Partition, Variant};
use serde_json::json;

use crate::{Cli, Command, MapArgs, VariantArg};

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or arguments: exit 2.
    Usage(String),
    /// Input outside the map's domain: exit 1.
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::Parse(_)
            | Error::InvalidModulus(_)
            | Error::InvalidFactor(_)
            | Error::InvalidPrimeOrder { .. }
            | Error::InvalidArgument(_)
            | Error::Overflow => CliError::Usage(err.to_string()),
            _ => CliError::Domain(err.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn parse_partition(text: &str) -> CliResult<Partition> {
    Partition::parse(text).map_err(|e| CliError::Usage(e.to_string()))
}

fn to_json(value: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string(value).expect("serializable"))
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Map(args) => map(args, cli.json, false),
        Command::Invert(args) => map(args, cli.json, true),
        Command::Orbit {
            s,
            t,
            max_iter,
            partition,
        } => {
            let start = parse_partition(partition)?;
            let report = regdist::classify_orbit(&start, *s, *t, *max_iter)?;
            if !report.in_domain {
                eprintln!("warning: input is not {s}-regular and {t}-distinct");
            }
            Ok(Output::ok(if cli.json {
                to_json(&serde_json::to_value(&report).expect("serializable"))
            } else {
                report.to_string()
            }))
        }
        Command::Census {
            s,
            t,
            n,
            max_iter,
            sequential,
        } => {
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let census = regdist::census(*n, *s, *t, *max_iter, exec)?;
            Ok(Output::ok(if cli.json {
                to_json(&serde_json::to_value(&census).expect("serializable"))
            } else {
                census.to_string()
            }))
        }
        Command::Count {
            n,
            regular,
            distinct,
        } => {
            let mut restriction = Restriction::new();
            for &m in regular {
                restriction = restriction.regular(m)?;
            }
            for &m in distinct {
                restriction = restriction.distinct(m)?;
            }
            let mut count: u64 = 0;
            visit_restricted(*n, DEFAULT_BOUND, &restriction, |_| count += 1)?;
            Ok(Output::ok(if cli.json {
                to_json(&json!({
                    "n": n,
                    "regular": regular,
                    "distinct": distinct,
                    "count": count,
                }))
            } else {
                format!("{count}\n")
            }))
        }
        Command::Gf { spec, degree } => gf(spec, *degree, cli.json),
        Command::Selftest => {
            let results = crate::selftest::run();
            let all_passed = results.iter().all(|r| r.passed);
            let stdout = if cli.json {
                to_json(&json!({
                    "passed": all_passed,
                    "checks": results
                        .iter()
                        .map(|r| json!({"name": r.name, "passed": r.passed}))
                        .collect::<Vec<_>>(),
                }))
            } else {
                let mut s = String::new();
                for r in &results {
                    s.push_str(&format!(
                        "{} {}\n",
                        if r.passed { "ok  " } else { "FAIL" },
                        r.name
                    ));
                }
                let failed = results.iter().filter(|r| !r.passed).count();
                s.push_str(&format!("{} checks, {} failed\n", results.len(), failed));
                s
            };
            Ok(Output {
                stdout,
                code: if all_passed { 0 } else { 1 },
            })
        }
    }
}

fn map(args: &MapArgs, json: bool, invert: bool) -> CliResult<Output> {
    let cfg = BijectionConfig {
        prime_order: args.order.clone(),
        variant: match args.variant {
            VariantArg::Prime => Variant::PrimeBase,
            VariantArg::Primepower => Variant::PrimePowerBase,
        },
    };
    let bij = Bijection::new(args.s, args.t, &cfg)?;
    let input = parse_partition(&args.partition)?;
    let output = if invert {
        bij.inverse(&input)?
    } else {
        bij.forward(&input)?
    };
    Ok(Output::ok(if json {
        to_json(&json!({
            "direction": if invert { "inverse" } else { "forward" },
            "s": args.s,
            "t": args.t,
            "order": bij.pair().shared_primes(),
            "variant": bij.variant(),
            "input": input,
            "output": output,
        }))
    } else {
        format!("{output}\n")
    }))
}

fn gf(spec: &str, degree: usize, json: bool) -> CliResult<Output> {
    let fields: Vec<&str> = spec.split_whitespace().collect();
    let [family, s, t] = fields[..] else {
        return Err(CliError::Usage(format!(
            "--spec must look like \"regular-distinct S T\", got {spec:?}"
        )));
    };
    let parse = |x: &str| {
        x.parse::<u64>()
            .map_err(|_| CliError::Usage(format!("bad modulus {x:?} in --spec")))
    };
    let (s, t) = (parse(s)?, parse(t)?);
    let series = match family {
        "regular-distinct" => gf_regular_distinct(s, t, degree)?,
        "regular-regular" => gf_regular_regular(s, t, degree)?,
        "theorem9" => gf_theorem9(s, t, degree)?,
        other => {
            return Err(CliError::Usage(format!(
                "unknown generating function {other:?}; expected regular-distinct, regular-regular or theorem9"
            )))
        }
    };
    Ok(Output::ok(if json {
        to_json(&json!({
            "family": family,
            "s": s,
            "t": t,
            "degree": degree,
            "coefficients": series.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }))
    } else {
        series.to_string()
    }))
}
