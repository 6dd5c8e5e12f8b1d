"""Differential rules, the rotation J, and the condition tensors."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from astheno.algebra import ETA1, ETA2, PHI1, PHI2, Form, Monomial, ProductGeometry
from astheno.calculus import (
    Condition,
    Convention,
    astheno_expansion,
    condition_tensor,
    d_c,
    exterior_d,
    j_action,
    kahler_form,
    wedge_identity_check,
)
from astheno.scalars import A1, A2, B1, B2
from astheno import fixtures

from conftest import forms, monomials, scalars


def test_generator_rules():
    assert exterior_d(ETA1) == Form.monomial(Monomial(0, 0, 1, 0), A1)
    assert exterior_d(ETA2) == Form.monomial(Monomial(0, 0, 0, 1), A2)
    assert exterior_d(PHI1) == Form.monomial(Monomial(1, 0, 1, 0), 2 * B1)
    assert exterior_d(PHI2) == Form.monomial(Monomial(0, 1, 0, 1), 2 * B2)
    # generator rules are convention-independent
    for gen in (ETA1, ETA2, PHI1, PHI2):
        assert exterior_d(gen) == exterior_d(gen, Convention.UNGRADED)


@given(monomials(max_pq=2), monomials(max_pq=2), scalars(), scalars())
def test_graded_leibniz(m1, m2, s1, s2):
    x = Form.monomial(m1, s1)
    y = Form.monomial(m2, s2)
    sign = -1 if m1.degree() % 2 else 1
    lhs = exterior_d(x.wedge(y))
    rhs = exterior_d(x).wedge(y) + sign * x.wedge(exterior_d(y))
    assert lhs == rhs


@given(forms(max_monos=3, max_pq=3))
@settings(max_examples=60)
def test_d_squared_vanishes_after_reduction(x):
    assert exterior_d(exterior_d(x)).reduce().is_zero


def test_d_squared_residual_is_the_ideal():
    assert exterior_d(exterior_d(ETA1)) == Form.monomial(
        Monomial(1, 0, 1, 0), 2 * A1 * B1
    )
    assert exterior_d(exterior_d(ETA2)) == Form.monomial(
        Monomial(0, 1, 0, 1), 2 * A2 * B2
    )


def test_d_respects_truncation():
    # d(eta1 /\ Phi1) = a1 * Phi1^2 overflows the p <= 1 bound
    geom = ProductGeometry(1, 1)
    form = Form.monomial(Monomial(1, 0, 1, 0))
    free = exterior_d(form)
    assert not free.is_zero
    assert exterior_d(form, geom=geom) == free.truncate(geom)
    assert exterior_d(form, geom=geom).is_zero


def test_j_generator_action_and_involution():
    assert j_action(ETA1) == ETA2
    assert j_action(ETA2) == -1 * ETA1
    assert j_action(PHI1) == PHI1
    assert j_action(PHI2) == PHI2
    assert j_action(j_action(ETA1)) == -1 * ETA1
    assert j_action(ETA1.wedge(ETA2)) == ETA1.wedge(ETA2)


@given(forms(max_monos=2, max_pq=2), forms(max_monos=2, max_pq=2))
def test_j_is_an_algebra_automorphism(x, y):
    assert j_action(x.wedge(y)) == j_action(x).wedge(j_action(y))
    assert j_action(x + y) == j_action(x) + j_action(y)


def test_j_fixes_the_fundamental_form():
    omega = kahler_form()
    assert j_action(omega) == omega


@given(forms(max_monos=2, max_pq=2))
def test_dc_is_rotation_of_d(x):
    for conv in Convention:
        assert d_c(x, conv) == j_action(exterior_d(x, conv))


def test_reference_displays_reproduce_ungraded():
    omega = kahler_form()
    conv = Convention.UNGRADED
    d_omega = exterior_d(omega, conv)
    dc_omega = d_c(omega, conv)
    assert d_omega == fixtures.equation_form("d_omega")
    assert dc_omega == fixtures.equation_form("dc_omega")
    assert exterior_d(dc_omega, conv) == fixtures.equation_form("ddc_omega")
    assert d_omega.wedge(dc_omega) == fixtures.equation_form("d_wedge_dc")
    assert exterior_d(dc_omega, conv).wedge(omega) == fixtures.equation_form(
        "ddc_wedge_omega"
    )


def test_wedge_identity_check_by_convention():
    ungraded = wedge_identity_check(Convention.UNGRADED)
    assert all(matched for _, matched, _ in ungraded)
    graded = wedge_identity_check(Convention.GRADED)
    assert not all(matched for _, matched, _ in graded)
    for _, matched, diff in graded + ungraded:
        assert matched == diff.is_zero


def test_expansion_identity_graded():
    for k in (2, 3, 4):
        omega_k = kahler_form().power(k)
        direct = exterior_d(d_c(omega_k, Convention.GRADED), Convention.GRADED)
        assert direct == astheno_expansion(k, Convention.GRADED), k


def test_expansion_rejects_small_power():
    with pytest.raises(ValueError):
        astheno_expansion(1, Convention.GRADED)


def test_condition_tensor_dispatch():
    geom = ProductGeometry(1, 1)
    omega = kahler_form()
    skt = condition_tensor(Condition.SKT, geom)
    assert skt == exterior_d(d_c(omega, geom=geom), geom=geom)
    # m = 3: astheno and skt coincide, gauduchon is one power higher
    assert condition_tensor(Condition.ASTHENO, geom) == skt
    gauduchon = condition_tensor(Condition.GAUDUCHON, geom)
    assert gauduchon == exterior_d(
        d_c(omega.power(2, geom), geom=geom), geom=geom
    )


def test_condition_tensor_accepts_strings():
    geom = ProductGeometry(2, 1)
    assert condition_tensor("skt", geom, "ungraded") == condition_tensor(
        Condition.SKT, geom, Convention.UNGRADED
    )
    with pytest.raises(ValueError):
        condition_tensor("pluriclosed-ish", geom)


def test_astheno_ungraded_takes_the_expansion_route():
    geom = ProductGeometry(2, 2).untruncated()
    tensor = condition_tensor(Condition.ASTHENO, geom, Convention.UNGRADED)
    assert tensor == astheno_expansion(geom.m - 2, Convention.UNGRADED, geom)
