use std::fs;

use dynkin_core::orbits::{build_poset, export, to_dot};
use dynkin_core::rational::{self, Rational};
use dynkin_core::reps::{dynkin_index_irrep, HighestWeight, RepIndexReport};
use dynkin_core::sl2index::{
    index_via_adjoint, index_via_simplest_rep, route, sl2_index_classical,
};
use dynkin_core::table::table;
use dynkin_core::verify::{self, Check, VerifyConfig};
use dynkin_core::{ClassicalKind, IndexReport, Partition, RootSystem};
use serde::Serialize;

use crate::algebra::Algebra;
use crate::args::{
    Cli, Command, Format, IndexArgs, PosetArgs, RepIndexArgs, TableArgs, Via, VerifyArgs,
};
use crate::render;
use crate::{CliError, Output};

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Table(a) => cmd_table(&a),
        Command::Index(a) => cmd_index(&a),
        Command::RepIndex(a) => cmd_rep_index(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Poset(a) => cmd_poset(&a),
    }
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::usage(format!("format {format:?} is not available for {command}"))
}

pub fn cmd_table(args: &TableArgs) -> Result<Output, CliError> {
    let cols = table(args.sample_rank)?;
    let text = match args.format.unwrap_or(Format::Md) {
        Format::Md => render::table_markdown(&cols),
        Format::Json => render::json(&cols),
        Format::Csv => render::table_csv(&cols),
        f => return Err(unsupported(f, "table")),
    };
    Ok(Output::ok(text))
}

#[derive(Debug, Serialize)]
struct IndexOutput {
    algebra: String,
    partition: Partition,
    #[serde(flatten)]
    report: IndexReport,
}

fn index_report(algebra: Algebra, p: &Partition, via: Via) -> Result<IndexReport, CliError> {
    let mut routes: Vec<(&str, Rational)> = Vec::new();
    match algebra.matrix() {
        Some((kind, n)) => {
            if p.size() != n {
                return Err(dynkin_core::Error::SizeMismatch {
                    expected: n,
                    got: p.size(),
                }
                .into());
            }
            if matches!(via, Via::Partition | Via::All) {
                routes.push((route::PARTITION, sl2_index_classical(kind, p)?));
            }
            if matches!(via, Via::Adjoint | Via::All) {
                routes.push((route::ADJOINT, index_via_adjoint(kind, p)?));
            }
            if via == Via::Simplest {
                return Err(CliError::usage(
                    "--via simplest applies to exceptional algebras only",
                ));
            }
        }
        None => {
            let t = algebra.lie_type()?;
            if !matches!(via, Via::Simplest | Via::All) {
                return Err(CliError::usage(format!(
                    "{t} is exceptional; use --via simplest"
                )));
            }
            routes.push((route::SIMPLEST, index_via_simplest_rep(t, p)?));
        }
    }
    Ok(IndexReport::from_routes(routes).into_checked()?)
}

pub fn cmd_index(args: &IndexArgs) -> Result<Output, CliError> {
    let algebra: Algebra = args.algebra.parse()?;
    let p: Partition = args.partition.parse()?;
    let report = index_report(algebra, &p, args.via)?;
    let out = IndexOutput {
        algebra: algebra.to_string(),
        partition: p,
        report,
    };
    let text = match args.format.unwrap_or(Format::Json) {
        Format::Json => render::json(&out),
        Format::Md | Format::Csv => {
            let rows: Vec<Vec<String>> = out
                .report
                .routes
                .iter()
                .map(|(name, v)| {
                    vec![
                        out.algebra.clone(),
                        out.partition.compact(),
                        name.clone(),
                        rational::render(v),
                    ]
                })
                .collect();
            let headers = ["algebra", "partition", "route", "value"];
            if args.format == Some(Format::Md) {
                render::markdown_rows(&headers, &rows)
            } else {
                let mut all = vec![headers.map(String::from).to_vec()];
                all.extend(rows);
                render::csv_rows(&all)
            }
        }
        f => return Err(unsupported(f, "index")),
    };
    Ok(Output::ok(text))
}

#[derive(Debug, Serialize)]
struct RepIndexOutput {
    algebra: String,
    weight: Vec<i64>,
    #[serde(flatten)]
    report: RepIndexReport,
}

pub fn cmd_rep_index(args: &RepIndexArgs) -> Result<Output, CliError> {
    let algebra: Algebra = args.algebra.parse()?;
    let t = algebra.lie_type()?;
    let weight = HighestWeight::parse(&args.weight, t.rank())?;
    let report = dynkin_index_irrep(&RootSystem::build(t), &weight);
    let out = RepIndexOutput {
        algebra: t.to_string(),
        weight: weight.coords().to_vec(),
        report,
    };
    let row = vec![
        out.algebra.clone(),
        out.weight
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(","),
        out.report.dimension.to_string(),
        rational::render(&out.report.index),
    ];
    let headers = ["algebra", "weight", "dimension", "index"];
    let text = match args.format.unwrap_or(Format::Json) {
        Format::Json => render::json(&out),
        Format::Md => render::markdown_rows(&headers, &[row]),
        Format::Csv => render::csv_rows(&[headers.map(String::from).to_vec(), row]),
        f => return Err(unsupported(f, "rep-index")),
    };
    Ok(Output::ok(text))
}

/// Config file first, then command-line overrides.
pub fn verify_config(args: &VerifyArgs) -> Result<VerifyConfig, CliError> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            toml::from_str(&text)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?
        }
        None => VerifyConfig::default(),
    };
    if !args.only.is_empty() {
        let mut checks = args
            .only
            .iter()
            .map(|s| s.parse::<Check>())
            .collect::<Result<Vec<_>, _>>()?;
        checks.sort();
        checks.dedup();
        config.checks = checks;
    }
    if let Some(v) = args.max_classical_rank {
        config.max_classical_rank = v;
    }
    if let Some(v) = args.max_partition_size {
        config.max_partition_size = v;
    }
    if let Some(v) = args.max_identity_n {
        config.max_identity_n = v;
    }
    config.validate()?;
    Ok(config)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let config = verify_config(args)?;
    let report = verify::run(&config)?;
    let text = match args.format.unwrap_or(Format::Md) {
        Format::Md => render::verify_markdown(&report),
        Format::Json => render::json(&report),
        Format::Csv => render::verify_csv(&report),
        f => return Err(unsupported(f, "verify")),
    };
    Ok(Output {
        text,
        ok: report.passed(),
    })
}

pub fn cmd_poset(args: &PosetArgs) -> Result<Output, CliError> {
    let kind: ClassicalKind = args.kind.parse()?;
    let poset = build_poset(kind, args.n)?;
    let text = match args.format.unwrap_or(Format::Dot) {
        Format::Dot => to_dot(&poset)?,
        Format::Json => render::json(&export(&poset)?),
        f => return Err(unsupported(f, "poset")),
    };
    Ok(Output::ok(text))
}
