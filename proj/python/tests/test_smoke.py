import pathlib

import pytest

import virtgraph as vg

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def load(name):
    return vg.Diagram.from_vgf((FIXTURES / f"{name}.vgf").read_text())


def test_s_polynomial_examples():
    assert vg.s_poly(load("theta_t")) == "-2*Q + 2"
    assert vg.s_poly(load("theta_p")) == "Q^2 - 3*Q + 2"
    for engine in ("state", "cd", "brauer"):
        assert vg.s_poly(load("k33_std"), engine) == vg.s_poly(load("k33_std"))


def test_yamada_and_classify():
    d = vg.Diagram.fixture("theta_t_as_spatial")
    assert vg.yamada(d, "s") == "-2*q - 2 - 2*q^-1"
    assert vg.yamada(d, "f") == "q^2 + q + 2 + q^-1 + q^-2"
    assert vg.classify(d)["verdict"] == "nonclassical"
    assert vg.classify(load("knotted_theta"))["verdict"] == "inconclusive"


def test_golden_and_obstruction():
    assert vg.golden(load("k4_r2"))
    with pytest.raises(vg.MapError):
        vg.golden(load("theta_t_as_spatial"))
    assert vg.obstruction(load("k33_drawn")) != "0"
    assert vg.obstruction(load("k4_r2")) == "0"


def test_round_trip_and_errors():
    for path in sorted(FIXTURES.glob("*.vgf")):
        d = vg.Diagram.from_vgf(path.read_text())
        assert vg.Diagram.from_vgf(d.to_vgf()).to_vgf() == d.to_vgf()
    with pytest.raises(vg.MapError):
        vg.Diagram.from_vgf('{"vertices": [[0, 0]], "edges": [[0, 1]]}')


def test_cli_and_gramian():
    assert vg.gram_det(3) == "Q^4 - 6*Q^3 + 9*Q^2 - 4*Q"
    code, out, _ = vg.run_cli(["invariant", "--poly", "s", str(FIXTURES / "theta_t.vgf")])
    assert code == 0 and out == "-2*Q + 2\n"
    code, _, _ = vg.run_cli(["no-such-command"])
    assert code == 2
