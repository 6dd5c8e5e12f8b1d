r"""Exterior derivative, complex rotation, and the curvature-type condition
tensors on a product of two almost-contact metric factors.

Generator rules:

    d eta_i = a_i * Phi_i          d Phi_i = 2 * b_i * eta_i /\ Phi_i

extended to canonical words by a Leibniz rule.  Two conventions are
implemented:

* ``graded``   d(x /\ y) = dx /\ y + (-1)^deg(x) x /\ dy.  The honest
  exterior differential; all verdicts use it.
* ``ungraded`` d(x /\ y) = dx /\ y + x /\ dy, applied left-to-right across
  the canonical word.  Not a derivation of the algebra; kept as a forensic
  tool because the reference derivations were carried out this way.

The almost-complex rotation J fixes Phi1, Phi2 and acts by
J(eta1) = eta2, J(eta2) = -eta1; d_c = J o d.  The fundamental 2-form of the
product metric is Omega = Phi1 + Phi2 - 2 eta1 /\ eta2, and the three
conditions checked downstream are cast as single tensors:

    skt        d d_c Omega
    astheno    d d_c Omega^(m-2)
    gauduchon  d d_c Omega^(m-1)
"""

from __future__ import annotations

from enum import Enum

from .algebra import ETA1, ETA2, PHI1, PHI2, Form, Monomial, ProductGeometry
from .scalars import A1, A2, B1, B2, Scalar


class Convention(str, Enum):
    GRADED = "graded"
    UNGRADED = "ungraded"


class Condition(str, Enum):
    ASTHENO = "astheno"
    SKT = "skt"
    GAUDUCHON = "gauduchon"


class InternalInconsistencyError(RuntimeError):
    """Two routes to the same tensor disagreed; the engine is broken."""


def _accumulate(out: dict, mono: Monomial, coeff: Scalar) -> None:
    acc = out.get(mono)
    coeff = coeff if acc is None else acc + coeff
    if coeff:
        out[mono] = coeff
    else:
        out.pop(mono, None)


def exterior_d(
    form: Form,
    convention: Convention = Convention.GRADED,
    geom: ProductGeometry | None = None,
) -> Form:
    """Differentiate term by term; scalars are closed.

    Per canonical word eta1^a eta2^b Phi1^p Phi2^q the four generator slots
    contribute (signs already normalised to canonical order):

        a: +a1 * eta2^b Phi1^(p+1) Phi2^q
        b: (-1)^a|graded * a2 * eta1^a Phi1^p Phi2^(q+1)
        p: [a=0] 2p*b1 * (-1)^b|ungraded * eta1 eta2^b Phi1^p Phi2^q
        q: [b=0] 2q*b2 * (-1)^a|graded * eta1^a eta2 Phi1^p Phi2^q

    where "|graded" marks the sign present only under the graded rule
    (Leibniz prefactor (-1)^(a+b) with b = 0) and "|ungraded" the sign
    present only under the ungraded rule (there it is a word-reordering
    sign, not a Leibniz sign).
    """
    graded = Convention(convention) is Convention.GRADED
    out: dict[Monomial, Scalar] = {}
    for mono, coeff in form.terms.items():
        a, b, p, q = mono
        if a:
            _accumulate(out, Monomial(0, b, p + 1, q), coeff * A1)
        if b:
            s = coeff * A2
            if graded and a:
                s = -s
            _accumulate(out, Monomial(a, 0, p, q + 1), s)
        if p and not a:
            s = coeff * B1 * (2 * p)
            if not graded and b:
                s = -s
            _accumulate(out, Monomial(1, b, p, q), s)
        if q and not b:
            s = coeff * B2 * (2 * q)
            if graded and a:
                s = -s
            _accumulate(out, Monomial(a, 1, p, q), s)
    result = Form.__new__(Form)
    result.terms = out
    if geom is not None:
        result = result.truncate(geom)
    return result


def j_action(form: Form) -> Form:
    """Algebra automorphism induced by the product almost-complex structure."""
    out: dict[Monomial, Scalar] = {}
    for mono, coeff in form.terms.items():
        if mono.e1 and not mono.e2:
            _accumulate(out, Monomial(0, 1, mono.p, mono.q), coeff)
        elif mono.e2 and not mono.e1:
            _accumulate(out, Monomial(1, 0, mono.p, mono.q), -coeff)
        else:
            # even part, and eta1/\eta2 where the two signs cancel
            _accumulate(out, mono, coeff)
    result = Form.__new__(Form)
    result.terms = out
    return result


def d_c(
    form: Form,
    convention: Convention = Convention.GRADED,
    geom: ProductGeometry | None = None,
) -> Form:
    return j_action(exterior_d(form, convention, geom))


def kahler_form() -> Form:
    """Fundamental 2-form of the product metric."""
    return PHI1 + PHI2 - 2 * ETA1.wedge(ETA2)


def _ddc(form: Form, convention: Convention, geom: ProductGeometry | None) -> Form:
    return exterior_d(d_c(form, convention, geom), convention, geom)


def astheno_expansion(
    k: int, convention: Convention, geom: ProductGeometry | None = None
) -> Form:
    r"""k * [d d_c Omega /\ Omega + (k-1) d Omega /\ d_c Omega] /\ Omega^(k-2).

    Closed-form route to d d_c Omega^k; provably equal to the direct value
    under the graded convention, and the route the reference tables took
    under the ungraded one.
    """
    if k < 2:
        raise ValueError("expansion defined for k >= 2")
    omega = kahler_form()
    d_omega = exterior_d(omega, convention, geom)
    dc_omega = d_c(omega, convention, geom)
    ddc_omega = exterior_d(dc_omega, convention, geom)
    bracket = ddc_omega.wedge(omega, geom) + (k - 1) * d_omega.wedge(dc_omega, geom)
    return (k * bracket).wedge(omega.power(k - 2, geom), geom)


def condition_tensor(
    kind: Condition,
    geom: ProductGeometry,
    convention: Convention = Convention.GRADED,
) -> Form:
    """The obstruction form whose vanishing defines the named condition.

    For astheno at m >= 4 the direct value and the expansion are both
    computed; under the graded convention they must agree exactly (anything
    else is an engine bug), and under the ungraded convention the expansion
    is returned because the ungraded "rule" is not a derivation, so only the
    expansion matches the route the reference tables were computed by.
    """
    kind = Condition(kind)
    convention = Convention(convention)
    m = geom.m
    omega = kahler_form()
    if kind is Condition.SKT:
        return _ddc(omega, convention, geom)
    if kind is Condition.GAUDUCHON:
        if m < 2:
            raise ValueError(f"gauduchon needs m >= 2, got m={m}")
        return _ddc(omega.power(m - 1, geom), convention, geom)
    if kind is Condition.ASTHENO:
        if m < 3:
            raise ValueError(f"astheno needs m >= 3, got m={m}")
        if m == 3:
            return _ddc(omega, convention, geom)
        expanded = astheno_expansion(m - 2, convention, geom)
        if convention is Convention.GRADED:
            direct = _ddc(omega.power(m - 2, geom), convention, geom)
            if direct != expanded:
                raise InternalInconsistencyError(
                    f"direct and expanded astheno tensors differ at {geom}"
                )
            return direct
        return expanded
    raise ValueError(f"unknown condition {kind!r}")


def wedge_identity_check(convention: Convention = Convention.GRADED):
    r"""Diff engine values of d Omega /\ d_c Omega and d d_c Omega /\ Omega
    against their transcribed closed forms.  Returns a list of
    (name, matched, diff) with diff = fixture - engine, computed untruncated.
    """
    convention = Convention(convention)
    from . import fixtures  # local import: fixtures sits above calculus

    omega = kahler_form()
    d_omega = exterior_d(omega, convention)
    dc_omega = d_c(omega, convention)
    engine = {
        "d_wedge_dc": d_omega.wedge(dc_omega),
        "ddc_wedge_omega": exterior_d(dc_omega, convention).wedge(omega),
    }
    report = []
    for name, value in engine.items():
        expected = fixtures.equation_form(name)
        diff = expected - value
        report.append((name, diff.is_zero, diff))
    return report
