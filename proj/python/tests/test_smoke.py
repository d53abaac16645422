import pytest

import ohk


def test_builtin_theory_text():
    text = ohk.builtin_theory_text("Grp")
    assert "theory Grp" in text
    assert "mul" in text and "inv" in text and "one" in text


def test_check_group_algebra():
    rep = ohk.check(ohk.s3_model("Q"))
    assert rep["schema"] == 1
    assert rep["ok"] is True
    assert rep["dims"]["dim"] == 6
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_check_over_prime_field():
    rep = ohk.check(ohk.cyclic_model(5, "F3"))
    assert rep["ok"] is True


def test_kernel_dims():
    a, b, hom = ohk.z4_to_z2_texts("Q")
    rep = ohk.kernel([a, b], hom)
    assert rep["ok"] is True
    assert rep["dims"] == {"hopf": 2, "linear": 2, "augmentation": 1}


def test_cokernel_and_factorize():
    a, b, hom = ohk.z4_to_z2_texts("Q")
    rep, lmod = ohk.cokernel([a, b], hom)
    assert rep["ok"] is True
    assert rep["dims"]["dim"] == 1
    assert ohk.check(lmod)["ok"] is True
    rep, middle = ohk.factorize([a, b], hom)
    assert rep["ok"] is True
    assert rep["dims"]["middle"] == 2


def test_reflect_abelianization():
    rep, lmod = ohk.reflect(ohk.s3_model("Q"), "Ab")
    assert rep["ok"] is True
    assert rep["dims"]["dim"] == 2
    assert "theory Ab" in lmod


def test_grouplikes():
    assert len(ohk.grouplikes(ohk.s3_model("Q"))) == 6
    assert len(ohk.grouplikes(ohk.primitive_f2_model())) == 1


def test_roundtrip_is_canonical():
    text = ohk.skew_brace6_model("Q")
    assert ohk.model_roundtrip(text) == text


def test_failure_reports_witness():
    text = ohk.cyclic_model(3, "Q")
    broken = text.replace("opmap inv : (g1) -> 1 g2", "opmap inv : (g1) -> 1 g1")
    rep = ohk.check(broken)
    assert rep["ok"] is False
    failing = [c for c in rep["checks"] if c["status"] == "fail"]
    assert failing and "witness" in failing[0]


def test_parse_error():
    with pytest.raises(ValueError):
        ohk.check("model Broken over Q\n")
