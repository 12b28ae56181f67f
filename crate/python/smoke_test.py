"""Smoke test for the `bicrit` extension module.

Build and install it first, e.g. `maturin develop -m crates/py/Cargo.toml`,
or put a built `bicrit` shared library on PYTHONPATH.
"""

import json
from fractions import Fraction

import bicrit

EX2 = json.dumps({
    "kind": "mst",
    "relaxed": False,
    "nodes": 3,
    "edges": [
        {"u": 0, "v": 1, "w1": "2", "w2": "1"},
        {"u": 1, "v": 2, "w1": "2", "w2": "1"},
        {"u": 0, "v": 2, "w1": "1", "w2": "2"},
    ],
})


def main():
    inst = bicrit.Instance.from_json(EX2)
    assert inst.kind == "mst" and inst.nodes == 3
    assert bicrit.Instance.from_json(inst.to_json()).to_json() == inst.to_json()

    opt = Fraction(inst.exact_opt_budget("3"))
    assert opt == 3
    for algorithm in ["sweep", "binary", "parametric", "fixed"]:
        res = bicrit.solve_budget(inst, "3", "1", algorithm)
        f1, f2 = Fraction(res["solution"]["f1"]), Fraction(res["solution"]["f2"])
        assert f1 <= Fraction(res["budget_factor"]) * 3, algorithm
        assert f2 <= Fraction(res["cost_factor"]) * opt, algorithm

    curve = bicrit.approximate_pareto(inst, "1")
    images = {(r["f1"], r["f2"]) for r in curve["records"]}
    assert images <= {("4", "2"), ("3", "3")}, images

    try:
        bicrit.solve_budget(inst, "1/10")
    except bicrit.NoCertificateError:
        pass
    else:
        raise AssertionError("expected NoCertificateError")

    ex1 = bicrit.reproduce("marathe-ex1")
    ratios = {row["d"]: row["ratio"] for row in ex1["tested"]}
    assert ratios["3"] == "7/3" and ratios["4"] == "5/2", ratios
    assert bicrit.reproduce("marathe-ex2")["outcome"] == "no-solution"

    print("ok")


if __name__ == "__main__":
    main()
