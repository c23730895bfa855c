"""Smoke test for the polycomp extension module.

Build and install first:
    pip install --no-build-isolation ./crates/python
"""

import json

import polycomp

S = {"field": {"GF": 2}, "rows": 1, "cols": 1, "entries": [[[0, 1]]]}


def main():
    es = json.loads(polycomp.eigenstructure(json.dumps(S)))
    assert es == {
        "degree": 1,
        "rank": 1,
        "hom_factors": [{"alpha": [0, 1], "e": 0}],
        "col_indices": [],
        "row_indices": [],
    }, es

    target = {"hom_factors": [{"alpha": [0, 1], "e": 0}], "col_indices": [], "row_indices": [0]}
    report = json.loads(polycomp.check(json.dumps(S), 1, json.dumps(target)))
    assert report["feasible"], report
    target["row_indices"] = [1]
    report = json.loads(polycomp.check(json.dumps(S), 1, json.dumps(target), theorem="full"))
    assert not report["feasible"] and "degree-sum" in report["violations"], report

    n2 = {
        "degree": 1,
        "rank": 2,
        "hom_factors": [{"alpha": ["1"], "e": 0}, {"alpha": ["1"], "e": 2}],
        "col_indices": [],
        "row_indices": [],
    }
    m = json.loads(polycomp.realize(json.dumps(n2), field="Q"))
    assert m["entries"] == [[["1"], ["0", "1"]], [[], ["1"]]], m

    rep = json.loads(polycomp.oracle("gf2 n=1 m=1 z=1 d=1", jobs=1))
    assert rep["mismatches"] == 0, rep

    try:
        polycomp.eigenstructure("{")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed JSON accepted")

    print(f"polycomp {polycomp.__version__}: smoke test passed")


if __name__ == "__main__":
    main()
