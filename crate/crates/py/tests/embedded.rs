use bicrit::bicrit;
use pyo3::ffi::c_str;
use pyo3::prelude::*;

#[test]
fn module_runs_under_embedded_python() {
    pyo3::append_to_inittab!(bicrit);
    Python::initialize();
    Python::attach(|py| {
        py.run(
            c_str!(
                r#"
import bicrit
inst = bicrit.Instance.from_json('{"kind": "mst", "nodes": 2, "edges": [{"u": 0, "v": 1, "w1": "3/2", "w2": "1"}]}')
res = bicrit.solve_budget(inst, "2", "1/2", "binary")
assert res["solution"]["f1"] == "3/2", res
assert res["budget_factor"] == "2"
assert [r["f1"] for r in bicrit.approximate_pareto(inst)["records"]] == ["3/2"]
try:
    bicrit.solve_budget(inst, "1", algorithm="nope")
    raise AssertionError("accepted an unknown algorithm")
except ValueError:
    pass
"#
            ),
            None,
            None,
        )
        .unwrap();
    });
}
