import pytest

import sdom


def test_version():
    assert sdom.__version__.count(".") == 2


def test_parse_and_serialize_round_trip():
    text = "sdfactoring 1\nn 4\nk 2\nfactor 1 m 2\n0 1\n2 3\nfactor 2 m 2\n0 2\n1 3\n"
    f = sdom.Factoring.parse(text)
    assert (f.n, f.k) == (4, 2)
    assert f.serialize() == text
    assert len(f.hash()) == 16


def test_parse_error_is_raised():
    with pytest.raises(sdom.Error):
        sdom.Factoring.parse("sdfactoring 1\nn 2\nk 1\nfactor 1 m 1\n0 0\n")


def test_sharp_families():
    assert sdom.sd_number(sdom.generate("stars", {"k": "3", "n": "8"}))[0] == 3
    assert sdom.sd_number(sdom.generate("treepair", {"t": "3"}))[0] == 6
    size, witness = sdom.sd_number(sdom.generate("k5c5", {"copies": "2"}))
    assert size == 6
    assert len(witness) == 6


def test_from_edges_and_verification():
    f = sdom.Factoring.from_edges(4, [[(0, 1), (2, 3)], [(0, 2), (1, 3)]])
    assert f.is_sd_set([0, 3])
    assert not f.is_sd_set([0, 1])
    assert f.edges(1) == [(0, 2), (1, 3)]


def test_solve_report():
    f = sdom.generate("k5c5", {"copies": "1"})
    report = sdom.solve(f, ["exact", "pair_matching", "c5_inductive"])
    assert report["exact"] == 3
    assert report["status"] == "OK"
    for row in report["methods"]:
        assert row["valid"]
        assert row["size"] == 3
        assert row["bound_respected"]


def test_random_instances_respect_bounds():
    for seed in range(1, 6):
        f = sdom.generate("random:regular:d=2", {"n": "10", "k": "2"}, seed)
        report = sdom.solve(f)
        assert report["status"] == "OK"


def test_bounds_and_tables():
    report = sdom.bounds(sdom.generate("onefactorization", {"k": "3", "copies": "2"}))
    one = next(e for e in report["entries"] if e["id"] == "one_factors")
    assert one["applicable"]
    assert one["limit"] == 6
    cells = sdom.tables()
    cell = next(c for c in cells if c["table"] == "3" and c["parameter_value"] == "2" and c["k"] == "3")
    assert abs(float(cell["value"]) - 0.7777) <= 1e-4 + 1e-9
    assert "exact" in sdom.method_names()


def test_unknown_family():
    with pytest.raises(sdom.Error):
        sdom.generate("nothing")
