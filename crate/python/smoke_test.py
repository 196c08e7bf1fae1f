"""Smoke test for the twodd_py extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import twodd_py as t


def main():
    g = t.fixture("split_example")
    assert (g.vertex_count, g.arc_count, g.ac_count) == (12, 24, 4)
    assert all(len(c) == 6 for c in g.acs())
    assert t.index(g) == 3
    assert t.hamiltonian_factor(g) is None
    assert len(t.factors(g)) == 16

    cert = t.certify(g)
    assert cert["verdict"] == "NonHamiltonian"
    assert cert["method"] == "split_parity"
    assert t.verify(g, cert)

    assert [5, 7] in t.minimal_split_sets(g, 2)
    a, b = t.splice_pair(g, 5, 7)
    assert t.parity_class(a, exhaustive=True) == "even"
    assert t.parity_class(b, exhaustive=True) == "even"

    f3 = t.fixture("closed_example")
    assert t.certify(f3)["method"] == "closed_subset"
    assert t.quotient(f3, [0]) == []

    row = t.classify_ac6(t.fixture("X_clean"))
    assert (row["name"], row["open_factors"], row["open_routes"]) == ("X_clean", 2, 2)
    assert t.open_routes(t.fixture("X_1S"))[0][1] == "even"

    family = t.enumerate_family("P6_1")
    assert len(family) == 10
    assert sum(x.is_saturated() for x in family) == 3
    assert t.census("B6_1")["total"] == 3

    again = t.TwoDigraph.parse(g.serialize())
    assert again == g
    assert "digraph" in g.to_dot(ac=0)

    try:
        t.TwoDigraph.from_pairs([(1, 2), (1, 3)])
    except t.TwoddError as e:
        assert "degree" in str(e)
    else:
        raise AssertionError("invalid graph accepted")
    try:
        t.enumerate_family("B6_6", budget=10)
    except t.LimitExceeded:
        pass
    else:
        raise AssertionError("budget not enforced")

    print("smoke test passed")


if __name__ == "__main__":
    main()
