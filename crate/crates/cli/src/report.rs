use bicrit_core::exact_search::GammaInterval;
use bicrit_core::marathe::{MaratheOutcome, MaratheTrace};
use bicrit_core::types::format_rational;
use bicrit_core::{GuaranteeCertificate, ParetoSet, Rational, SolutionRecord};
use serde_json::{json, Value};

pub fn rational(value: &Rational) -> Value {
    Value::String(format_rational(value))
}

pub fn record(r: &SolutionRecord) -> Value {
    json!({
        "token": r.token,
        "f1": rational(&r.image.f1),
        "f2": rational(&r.image.f2),
        "gamma": r.produced_at.as_ref().map(|w| rational(w.value())),
    })
}

pub fn records(rs: &[SolutionRecord]) -> Value {
    Value::Array(rs.iter().map(record).collect())
}

pub fn certificate(c: &GuaranteeCertificate) -> Value {
    json!({
        "alpha": rational(&c.alpha),
        "epsilon": rational(&c.epsilon),
        "budget": rational(&c.budget),
        "budget_factor": rational(&c.budget_factor),
        "cost_factor": rational(&c.cost_factor),
        "oracle_calls": c.oracle_calls,
    })
}

pub fn interval(i: &GammaInterval) -> Value {
    json!({ "lo": rational(&i.lo), "hi": rational(&i.hi) })
}

pub fn pareto(set: &ParetoSet) -> Value {
    json!({
        "factor1": rational(&set.factor1),
        "factor2": rational(&set.factor2),
        "records": records(&set.records),
    })
}

pub fn trace(t: &MaratheTrace) -> Value {
    let tested: Vec<Value> = t
        .tested
        .iter()
        .map(|p| {
            json!({
                "d": rational(&p.d),
                "h": rational(&p.h),
                "ratio": p.ratio().as_ref().map(rational),
                "solution": record(&p.record),
            })
        })
        .collect();
    let outcome = match &t.outcome {
        MaratheOutcome::Solution(r) => json!({ "status": "solution", "solution": record(r) }),
        MaratheOutcome::NoSolution => json!({ "status": "no-solution" }),
    };
    json!({
        "params": {
            "budget": rational(&t.params.budget),
            "epsilon": rational(&t.params.eps),
            "ub2": rational(&t.params.ub2),
        },
        "tested": tested,
        "outcome": outcome,
        "opt_budget": t.opt_budget.as_ref().map(rational),
    })
}

/// `f1,f2` header plus one row per record.
pub fn csv(rs: &[SolutionRecord]) -> String {
    let mut out = String::from("f1,f2\n");
    for r in rs {
        out.push_str(&format!(
            "{},{}\n",
            format_rational(&r.image.f1),
            format_rational(&r.image.f2)
        ));
    }
    out
}
