from lgmirror.catalog import ENTRIES, all_pairs, entries, pairs
from lgmirror.checks import group_sanity, milnor_sanity, mixed_vanishing
from lgmirror.polyform import parse_polynomial
from lgmirror.symmetry import J_group


def test_fifteen_entries():
    assert len(ENTRIES) == 15
    assert {e.family for e in ENTRIES} == {"fermat", "sum", "loop", "chain", "mixed"}


def test_filter_by_family_and_name():
    assert [e.name for e in entries("fermat")] == ["x3", "x4", "x5"]
    assert [e.name for e in entries(["loop(2,2)", "x3"])] == ["x3", "loop(2,2)"]
    assert len(entries(None)) == 15


def test_violating_pair_is_dropped_unless_kept():
    e = entries("x3+chain(2,3)")[0]
    kept = pairs(e, keep_violations=True)
    assert [p.G.order for p in kept if not p.property1] == [6]
    assert all(p.property1 for p in pairs(e))


def test_pair_counts():
    assert len(all_pairs("fermat")) == 3
    assert len(all_pairs("x3+y3+z3")) == 6


def test_label():
    p = pairs(entries("x3")[0])[0]
    assert p.label == "x3 |G|=3 <(1/3)>"


def test_sanity_suites_on_small_entry():
    W = parse_polynomial("x^2*y+y^3")
    assert all(group_sanity(W, J_group(W)).values())
    assert all(milnor_sanity(W).values())


def test_mixed_vanishing_counts():
    W = parse_polynomial("x^3+y^2*z+z^3")
    out = mixed_vanishing(W, J_group(W))
    assert out["pairs"] == 4 and out["b_zero"] == 4 and out["a_zero"] == 4
    assert not out["failures"]


def test_filter_string_keeps_parenthesised_names():
    assert [e.name for e in entries("loop(2,2),chain(2,3),x3")] == ["x3", "loop(2,2)", "chain(2,3)"]
