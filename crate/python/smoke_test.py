"""Smoke test for the pybitrade extension.

Build and install first:

    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/pybitrade-*.whl
    python python/smoke_test.py
"""

import pybitrade as pb


def check_group():
    g = pb.Group("sym:3")
    assert g.order() == 6
    assert len(g.elements()) == 6
    assert g.order_of("(1,2,3)") == 3
    assert g.mul("(1,2,3)", g.inverse("(1,2,3)")) == g.elements()[0]


def check_s3():
    b = pb.Bitrade.from_group(pb.Group("sym:3"), "(1,2,3)", "(1,2)", "(2,3)")
    assert (b.size, len(b.rows), len(b.cols), len(b.syms)) == (6, 2, 3, 3)
    rep = b.verify()
    assert rep["thin"]["value"] == "yes"
    assert rep["orthogonal"]["value"] == "yes"
    assert rep["homogeneous_k"]["value"] == "no"
    assert pb.Bitrade.from_json(b.to_json()) == b
    assert b.render().startswith("∘")


def check_a4():
    b = pb.Bitrade.from_family("alt:m=1")
    rep = b.verify()
    for name in ("bitrade", "separated", "primary", "thin", "orthogonal", "minimal"):
        assert rep[name]["value"] == "yes", name
    assert rep["homogeneous_k"]["k"] == 3


def check_errors():
    try:
        pb.Bitrade.from_group(pb.Group("sym:3"), "(1,2,3)", "(1,2)", "(1,3)")
    except pb.ValidationError as e:
        assert "G1" in str(e)
    else:
        raise AssertionError("G1 violation accepted")
    try:
        pb.Bitrade.from_family("alt:m=2", cap=1000)
    except pb.ResourceError:
        pass
    else:
        raise AssertionError("cap ignored")


def check_intercalate():
    circ = [("r1", "c1", "s1"), ("r1", "c2", "s2"), ("r2", "c1", "s2"), ("r2", "c2", "s1")]
    star = [("r1", "c1", "s2"), ("r1", "c2", "s1"), ("r2", "c1", "s1"), ("r2", "c2", "s2")]
    b = pb.Bitrade.from_triples(circ, star)
    assert len(b) == 4
    assert b.verify("primary,minimal")["minimal"]["value"] == "yes"


def check_families():
    assert not pb.pq_thin_predicate(23, 11, 4)
    assert (4, 6) in pb.pq_thin_solutions(23, 11, 4)
    assert pb.predict("p3:p=5")["size"] == 125
    rows = pb.table([3, 5], recompute=True)
    assert [r["smallest"] for r in rows] == [12, 55]
    assert rows[0]["verified"] == ["p3", "pq", "alt"]
    found = pb.search(pb.Group("alt:4"), k=3, generating=True)
    assert found and all(r["thin"] and r["orthogonal"] for r in found)


if __name__ == "__main__":
    for check in (check_group, check_s3, check_a4, check_errors, check_intercalate, check_families):
        check()
        print(f"ok  {check.__name__}")
