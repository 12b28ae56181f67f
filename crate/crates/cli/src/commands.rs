use std::fs;
use std::time::Instant;

use bicrit_core::exact_search::{solve_budget_binary, solve_budget_parametric};
use bicrit_core::format::parse_instance;
use bicrit_core::marathe::{example1_exact_counterpart, reproduce_example1, reproduce_example2};
use bicrit_core::oracle::{exact_opt_budget, verify_budget_factors, verify_pareto_coverage, EnumerationCap};
use bicrit_core::pareto::{approximate_pareto_with, extended_pareto, pareto_from_parametric};
use bicrit_core::problems::fixtures;
use bicrit_core::sweep::{solve_budget_fixed, solve_budget_sweep_with};
use bicrit_core::types::{format_rational, int, parse_rational, rat};
use bicrit_core::{BudgetQuery, BudgetSolution, Epsilon, Error, Instance, Rational};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::cli::{BudgetAlgorithm, Case, Common, Format, ParetoAlgorithm, ParetoArgs, ReproArgs, SolveArgs};
use crate::report;

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NO_CERTIFICATE: u8 = 3;
pub const EXIT_INPUT: u8 = 4;

/// What to print and how to exit.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

/// A run that stopped before producing a report.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } | Error::Validation { .. } => EXIT_INPUT,
            Error::NoCertificate { .. } => EXIT_NO_CERTIFICATE,
            Error::ExactOracleRequired { .. }
            | Error::NotParametricCapable(_)
            | Error::InvalidArgument(_)
            | Error::CapExceeded(_) => EXIT_USAGE,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Run<T> = Result<T, Failure>;

fn rational_flag(text: &str, flag: &str) -> Run<Rational> {
    parse_rational(text).map_err(|e| Failure::usage(format!("{flag}: {e}")))
}

struct Loaded {
    instance: Instance,
    digest: String,
}

fn load(common: &Common) -> Run<Loaded> {
    let bytes = fs::read(&common.input).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("cannot read {}: {e}", common.input.display()),
    })?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure {
        code: EXIT_INPUT,
        message: format!("{} is not UTF-8", common.input.display()),
    })?;
    let instance = parse_instance(&text)?;
    if instance.kind() != common.problem.name() {
        return Err(Failure::usage(format!(
            "--problem {} does not match the instance kind {}",
            common.problem.name(),
            instance.kind()
        )));
    }
    if common.verify && instance.node_count() > EnumerationCap::default().max_nodes {
        return Err(Error::CapExceeded(format!(
            "--verify enumerates at most {} nodes, instance has {}",
            EnumerationCap::default().max_nodes,
            instance.node_count()
        ))
        .into());
    }
    Ok(Loaded {
        instance,
        digest: format!("{:x}", Sha256::digest(&bytes)),
    })
}

fn header(command: &str, args: &[String], loaded: &Loaded) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("args".into(), json!(args));
    m.insert(
        "instance".into(),
        json!({
            "kind": loaded.instance.kind(),
            "nodes": loaded.instance.node_count(),
            "sha256": loaded.digest,
        }),
    );
    m
}

fn finish(mut m: Map<String, Value>, start: Instant) -> String {
    m.insert("wall_time_s".into(), json!(start.elapsed().as_secs_f64()));
    let mut out = serde_json::to_string_pretty(&Value::Object(m)).expect("reports serialize");
    out.push('\n');
    out
}

fn algorithm_name(a: BudgetAlgorithm) -> &'static str {
    match a {
        BudgetAlgorithm::Sweep => "sweep",
        BudgetAlgorithm::Binary => "binary",
        BudgetAlgorithm::Parametric => "parametric",
        BudgetAlgorithm::Fixed => "fixed",
    }
}

pub fn solve_budget(args: &SolveArgs, argv: &[String]) -> Run<Outcome> {
    let common = &args.common;
    let budget = rational_flag(&args.budget, "--budget")?;
    let eps = Epsilon::new(rational_flag(&common.epsilon, "--epsilon")?)?;
    if args.algorithm == BudgetAlgorithm::Fixed && eps != Epsilon::one() {
        return Err(Failure::usage("the fixed variant always uses epsilon = 1"));
    }
    let query = BudgetQuery::new(budget.clone(), eps)?;
    let loaded = load(common)?;
    let problem = loaded.instance.problem();

    let start = Instant::now();
    let mut extra = Map::new();
    let result: Result<BudgetSolution, Error> = match args.algorithm {
        BudgetAlgorithm::Sweep => solve_budget_sweep_with(problem, &query, common.parallel),
        BudgetAlgorithm::Binary => solve_budget_binary(problem, &query),
        BudgetAlgorithm::Fixed => solve_budget_fixed(problem, &budget),
        BudgetAlgorithm::Parametric => {
            let parametric = loaded.instance.parametric()?;
            solve_budget_parametric(parametric, &query).map(|res| {
                extra.insert("final_interval".into(), report::interval(&res.final_interval));
                extra.insert("comparisons".into(), json!(res.comparisons));
                extra.insert("resolutions".into(), json!(res.resolutions));
                res.solution
            })
        }
    };

    let mut m = header("solve-budget", argv, &loaded);
    m.insert("algorithm".into(), json!(algorithm_name(args.algorithm)));
    m.insert("budget".into(), report::rational(&budget));
    m.insert("epsilon".into(), report::rational(query.eps.value()));
    let opt = if common.verify {
        Some(exact_opt_budget(loaded.instance.enumerable(), &budget)?)
    } else {
        None
    };

    let (code, rows) = match result {
        Ok(sol) => {
            m.insert("status".into(), json!("certified"));
            m.insert("solution".into(), report::record(&sol.record));
            m.insert("certificate".into(), report::certificate(&sol.certificate));
            m.extend(extra);
            m.insert("oracle_calls".into(), json!(sol.certificate.oracle_calls));
            m.insert("transcript".into(), report::records(&sol.transcript));
            if let Some(opt) = &opt {
                let c = &sol.certificate;
                let passed = match opt {
                    Some(opt) => verify_budget_factors(&sol.record, &budget, opt, &c.budget_factor, &c.cost_factor),
                    None => sol.record.image.f1 <= &c.budget_factor * &budget,
                };
                m.insert(
                    "verification".into(),
                    json!({ "opt": opt.as_ref().map(report::rational), "passed": passed }),
                );
            }
            (0, vec![sol.record])
        }
        Err(Error::NoCertificate { transcript }) => {
            m.insert("status".into(), json!("no-certificate"));
            m.insert("oracle_calls".into(), json!(transcript.len()));
            m.insert("transcript".into(), report::records(&transcript));
            if let Some(opt) = &opt {
                m.insert(
                    "verification".into(),
                    json!({ "opt": opt.as_ref().map(report::rational), "feasible": opt.is_some() }),
                );
            }
            (EXIT_NO_CERTIFICATE, transcript)
        }
        Err(e) => return Err(e.into()),
    };
    let stdout = match common.format {
        Format::Json => finish(m, start),
        Format::Csv => report::csv(&rows),
    };
    Ok(Outcome { stdout, code })
}

pub fn pareto(args: &ParetoArgs, argv: &[String]) -> Run<Outcome> {
    let common = &args.common;
    let eps = Epsilon::new(rational_flag(&common.epsilon, "--epsilon")?)?;
    let loaded = load(common)?;
    let problem = loaded.instance.problem();

    let start = Instant::now();
    let (name, set) = match args.algorithm {
        ParetoAlgorithm::Grid => ("grid", approximate_pareto_with(problem, &eps, common.parallel)?),
        ParetoAlgorithm::Parametric => (
            "parametric",
            pareto_from_parametric(loaded.instance.parametric()?, &eps)?,
        ),
        ParetoAlgorithm::Extended => ("extended", extended_pareto(problem, &eps)?),
    };

    if common.format == Format::Csv {
        return Ok(Outcome {
            stdout: report::csv(&set.records),
            code: 0,
        });
    }
    let mut m = header("pareto", argv, &loaded);
    m.insert("algorithm".into(), json!(name));
    m.insert("epsilon".into(), report::rational(eps.value()));
    m.insert("pareto".into(), report::pareto(&set));
    m.insert("oracle_calls".into(), json!(set.oracle_calls));
    if common.verify {
        let all = loaded.instance.enumerable().enumerate_all(&EnumerationCap::default())?;
        let passed = verify_pareto_coverage(&set.records, &all, &set.factor1, &set.factor2);
        m.insert(
            "verification".into(),
            json!({ "solutions": all.len(), "passed": passed }),
        );
    }
    Ok(Outcome {
        stdout: finish(m, start),
        code: 0,
    })
}

fn certified_on_example2() -> Run<Value> {
    let ex2 = fixtures::example2_mst();
    let query = BudgetQuery::new(int(3), Epsilon::new(rat(2, 3))?)?;
    let sweep = solve_budget_sweep_with(&ex2, &query, false)?;
    let binary = solve_budget_binary(&ex2, &query)?;
    let parametric = solve_budget_parametric(&ex2, &query)?.solution;
    let entry = |s: &BudgetSolution| json!({ "solution": report::record(&s.record), "certificate": report::certificate(&s.certificate) });
    Ok(json!({
        "sweep": entry(&sweep),
        "binary": entry(&binary),
        "parametric": entry(&parametric),
    }))
}

fn repro_rows(tested: &[bicrit_core::marathe::Probe]) -> String {
    let mut out = String::from("d,h,f1,f2\n");
    for p in tested {
        out.push_str(&format!(
            "{},{},{},{}\n",
            format_rational(&p.d),
            format_rational(&p.h),
            format_rational(&p.record.image.f1),
            format_rational(&p.record.image.f2)
        ));
    }
    out
}

pub fn repro(args: &ReproArgs, argv: &[String]) -> Run<Outcome> {
    let start = Instant::now();
    let mut m = Map::new();
    m.insert("command".into(), json!("repro"));
    m.insert("args".into(), json!(argv));
    let trace = match args.case {
        Case::MaratheEx1 => {
            let trace = reproduce_example1()?;
            let exact = example1_exact_counterpart()?;
            m.insert("case".into(), json!("marathe-ex1"));
            m.insert("oracle".into(), json!("scripted 5/4-approximate spanning tree"));
            m.insert("trace".into(), report::trace(&trace));
            m.insert("exact_counterpart".into(), report::trace(&exact));
            trace
        }
        Case::MaratheEx2 => {
            let trace = reproduce_example2()?;
            m.insert("case".into(), json!("marathe-ex2"));
            m.insert("oracle".into(), json!("exact spanning tree"));
            m.insert("trace".into(), report::trace(&trace));
            m.insert("certified".into(), certified_on_example2()?);
            trace
        }
    };
    let stdout = match args.format {
        Format::Json => finish(m, start),
        Format::Csv => repro_rows(&trace.tested),
    };
    Ok(Outcome { stdout, code: 0 })
}
