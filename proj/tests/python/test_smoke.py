import math

import pytest

import comptonledger as cl


def test_constants_table():
    t = cl.ConstantsTable.builtin()
    assert t.contains("hbar")
    assert not t.contains("nope")
    assert t.magnitude("hbar") == 1.054571817e-27
    assert t.unit("c") == "cm s^-1"
    assert abs(t.magnitude("l_pi") - 1.4138215877393478e-13) < 1e-25
    assert len(t.fingerprint()) == 16
    assert "hbar" in t.names()
    reparsed = cl.ConstantsTable.parse(t.serialize())
    assert reparsed.magnitude("m_pi") == t.magnitude("m_pi")
    with pytest.raises(ValueError):
        cl.ConstantsTable.parse("garbage")


def test_relation_checks():
    assert len(cl.relation_ids()) == 21
    report = cl.check()
    assert report["summary"]["total"] == 21
    assert report["summary"]["failed"] == 0
    e17 = next(r for r in report["results"] if r["id"] == "E17")
    assert e17["gap_decades"] == pytest.approx(2.2531, abs=1e-3)

    tight = cl.check(rel=["E17"], tol={"E17": 0.1})
    assert tight["summary"]["failed"] == 1


def test_simulation():
    t = cl.ConstantsTable.builtin()
    tau = t.magnitude("tau_pi")
    assert cl.creation_rate(1e80, tau) == pytest.approx(2.120440518095058e63, rel=1e-12)

    ts = cl.simulate(t, n0=1.0, t_end=1000 * tau, dt=0.1 * tau)
    exact = cl.closed_form_n(1000 * tau, 1.0, tau)
    assert ts["N"][-1] == pytest.approx(exact, rel=1e-8)
    assert len(ts["t"]) == 10001

    ens = cl.simulate(t, n0=1.0, t_end=100 * tau, dt=0.5 * tau,
                      mode="stochastic", seed=42, ensemble=16)
    assert ens["ensemble"]
    assert ens["N_mean"] == cl.simulate(t, n0=1.0, t_end=100 * tau, dt=0.5 * tau,
                                        mode="stochastic", seed=42,
                                        ensemble=16)["N_mean"]

    d = cl.derived_observables(1e80, t)
    assert d["H"] == pytest.approx(2.120440518095058e-17, rel=1e-12)

    with pytest.raises(ValueError):
        cl.simulate(t, n0=1.0, t_end=10 * tau, dt=2 * tau)


def test_algebra():
    for which, signature in [("dirac-standard", [1, -1, -1, -1]),
                             ("quantized-coordinates", [1, 1, 1, 1])]:
        r = cl.verify_clifford(which)
        assert r["max_deviation"] == 0.0
        assert r["inferred_signature"] == signature
        assert r["matches_declared"]

    t = cl.ConstantsTable.builtin()
    hbar = t.magnitude("hbar")
    p = t.magnitude("m_pi") * t.magnitude("c")
    assert cl.snyder_deformation(p, hbar / p, hbar) == 2.0

    mc = p
    c = t.magnitude("c")
    e = math.sqrt(2.0) * mc
    assert cl.onshell_nullspace(e, mc, 0.0, 0.0, t.magnitude("m_pi"), c,
                                1e-8 * mc * c) == 2
    assert cl.onshell_nullspace(3 * e, mc, 0.0, 0.0, t.magnitude("m_pi"), c,
                                1e-8 * mc * c) == 0


def test_particles():
    t = cl.ConstantsTable.builtin()
    assert cl.charge_fraction(1) == "1/3"
    assert cl.charge_fraction(2) == "2/3"
    assert cl.charge_fraction(3) == "1"

    q = cl.quark_mass_estimate(t)
    assert q["ratio_to_electron"] == pytest.approx(1e3, rel=1e-12)
    assert q["alpha_fs_over_9"] == pytest.approx(8.10816951329623e-4, rel=1e-10)

    w = cl.weak_coupling_check(t)
    assert w["g2_lw2"] == pytest.approx(8.187105775475755e-60, rel=1e-10)
    assert all(r["passed"] for r in w["checks"])

    l_pi = t.magnitude("l_pi")
    assert cl.zpf_energy(l_pi, t) == pytest.approx(2.2361568100079266e-4, rel=1e-12)

    assert cl.decade_gap(5.6e37, 1e40) == pytest.approx(2.2518119729937998, rel=1e-12)
