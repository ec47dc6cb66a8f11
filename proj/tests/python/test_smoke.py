"""Python smoke tests for the adrkit bindings."""

import adrkit


def labels(summands):
    return {(s["i"], s["j"]): s["mult"] for s in summands}


def test_builtin_algebras_build():
    names = adrkit.builtin_names()
    assert {"kx2", "ex36", "ex54", "a_n"} <= set(names)
    alg = adrkit.algebra_from_text(adrkit.builtin_text("kx2"))
    assert alg.dim == 2
    assert alg.loewy_length == 2
    assert alg.field == "Q"


def test_adr_of_kx2():
    alg = adrkit.algebra_from_text(adrkit.builtin_text("kx2"))
    ctx = alg.adr()
    assert ctx.dim_R == 5
    assert ctx.dim_rad_R == 3
    assert ctx.labels == [(1, 1), (1, 2)]
    p12 = ctx.projective_R(1, 2)
    assert p12.dim == 3
    assert ctx.standard(1, 1).dim == 2


def test_counterexample_values():
    rep = adrkit.counterexample(5)
    assert rep["failures"] == []
    assert rep["dim_p33"] == 6
    assert rep["ll_p33"] == 5
    assert rep["ll_p22"] == 6
    assert (rep["ll_p1m"], rep["ll_p2m"]) == (5, 6)
    assert rep["dll_ok"] is False

    rep4 = adrkit.counterexample(4)
    assert (rep4["ll_p1m"], rep4["ll_p2m"]) == (5, 5)
    assert rep4["dll_ok"] is False


def test_approximation_of_the_hereditary_example():
    alg = adrkit.algebra_from_text(adrkit.builtin_text("ex54"))
    m = alg.module("quot_soc(P(1),6)")
    assert m.total_dim == 5
    assert not m.is_rigid
    ctx = alg.adr()
    rep = ctx.approximate(m)
    assert rep["is_approximation"] and rep["is_right_minimal"]
    assert labels(rep["summands"]) == {(1, 3): 1, (4, 1): 1}


def test_filtration_matches_the_socle_series():
    alg = adrkit.algebra_from_text(adrkit.builtin_text("a_n"), {"n": 5})
    n1 = alg.module("homG(rad^1(P(3)))")
    assert n1.dim == 5
    assert n1.loewy_length == 4
    ctx = alg.adr()
    filt = ctx.filtration(n1)
    assert filt["length"] == 2
    assert filt["chain_dims"] == [3, 5]
    assert labels(filt["layers"][0]) == {(3, 1): 1}
    assert labels(filt["layers"][1]) == {(2, 2): 1}

    check = ctx.verify_socle_correspondence(alg.module("rad^1(P(3))"))
    assert check["ok"]
    assert check["delta_ss_length"] == check["loewy_length"] == 2


def test_errors_are_python_exceptions():
    alg = adrkit.algebra_from_text(adrkit.builtin_text("kx2"))
    try:
        alg.module("P(9)")
    except ValueError:
        pass
    else:
        raise AssertionError("expected InputError")
