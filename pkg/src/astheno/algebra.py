r"""Graded-commutative wedge algebra on the generators eta1, eta2, Phi1, Phi2.

eta1 and eta2 are odd (degree 1): they square to zero and anticommute with
each other.  Phi1 and Phi2 are even (degree 2) and central.  Every element is
a Scalar-weighted sum of canonical words

    eta1^a /\ eta2^b /\ Phi1^p /\ Phi2^q      a, b in {0, 1},  p, q >= 0,

with all reordering signs folded into the coefficients; the only sign source
is the transposition of the two odd generators.

On a product of almost-contact factors of real dimensions 2*m1 + 1 and
2*m2 + 1 the fundamental 2-forms are nilpotent, Phi_i^(m_i + 1) = 0.  That
cutoff is the ``truncate`` flag of :class:`ProductGeometry`: monomials with
p > m1 or q > m2 are discarded, while the factor volume forms at p = m1,
q = m2 are kept.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, NamedTuple, Union

from .scalars import RationalLike, Scalar

ScalarLike = Union[Scalar, int, Fraction]


class Monomial(NamedTuple):
    e1: int  # exponent of eta1 (0 or 1)
    e2: int  # exponent of eta2 (0 or 1)
    p: int  # exponent of Phi1
    q: int  # exponent of Phi2

    def degree(self) -> int:
        return self.e1 + self.e2 + 2 * self.p + 2 * self.q

    def validate(self) -> "Monomial":
        if self.e1 not in (0, 1) or self.e2 not in (0, 1):
            raise ValueError(f"odd exponents must be 0 or 1, got {self}")
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative even exponent in {self}")
        return self


UNIT_MONOMIAL = Monomial(0, 0, 0, 0)


@dataclass(frozen=True)
class ProductGeometry:
    """Half-dimensions of the two factors plus the truncation switch.

    Factor i has real dimension 2*m_i + 1; the product has real dimension
    2*m with m = m1 + m2 + 1.  Degenerate factors (m_i = 0, i.e. dimension 1)
    carry no fundamental 2-form and are rejected outright.
    """

    m1: int
    m2: int
    truncate: bool = True

    def __post_init__(self) -> None:
        if self.m1 < 1 or self.m2 < 1:
            raise ValueError(
                f"factor half-dimensions must be >= 1, got m1={self.m1}, m2={self.m2}"
            )

    @property
    def m(self) -> int:
        return self.m1 + self.m2 + 1

    @property
    def factor_dims(self) -> tuple:
        return (2 * self.m1 + 1, 2 * self.m2 + 1)

    def admits(self, mono: Monomial) -> bool:
        return not self.truncate or (mono.p <= self.m1 and mono.q <= self.m2)

    def untruncated(self) -> "ProductGeometry":
        return replace(self, truncate=False)

    def truncated(self) -> "ProductGeometry":
        return replace(self, truncate=True)


def _coerce(value: ScalarLike) -> Scalar:
    if isinstance(value, Scalar):
        return value
    return Scalar.rational(value)


class Form:
    """Canonical element of the algebra: Monomial -> nonzero Scalar."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, ScalarLike] | None = None):
        data: dict[Monomial, Scalar] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(mono, Monomial):
                    mono = Monomial(*mono)
                mono.validate()
                scalar = _coerce(coeff)
                if scalar:
                    acc = data.get(mono)
                    scalar = scalar if acc is None else acc + scalar
                    if scalar:
                        data[mono] = scalar
                    else:
                        data.pop(mono, None)
        self.terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Form":
        return cls()

    @classmethod
    def one(cls) -> "Form":
        return cls({UNIT_MONOMIAL: 1})

    @classmethod
    def from_scalar(cls, scalar: ScalarLike) -> "Form":
        return cls({UNIT_MONOMIAL: _coerce(scalar)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: ScalarLike = 1) -> "Form":
        return cls({mono: coeff})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.terms == other.terms

    def degrees(self) -> frozenset:
        return frozenset(m.degree() for m in self.terms)

    def homogeneous_degree(self) -> int | None:
        degs = self.degrees()
        return next(iter(degs)) if len(degs) == 1 else None

    def params_present(self) -> frozenset:
        out: frozenset = frozenset()
        for scalar in self.terms.values():
            out |= scalar.params_present()
        return out

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono)
            coeff = coeff if acc is None else acc + coeff
            if coeff:
                out[mono] = coeff
            else:
                out.pop(mono, None)
        result = Form.__new__(Form)
        result.terms = out
        return result

    def __sub__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Form":
        result = Form.__new__(Form)
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __mul__(self, scalar: ScalarLike) -> "Form":
        if isinstance(scalar, Form):
            raise TypeError("use Form.wedge for products of forms")
        scalar = _coerce(scalar)
        out = {}
        for mono, coeff in self.terms.items():
            c = coeff * scalar
            if c:
                out[mono] = c
        result = Form.__new__(Form)
        result.terms = out
        return result

    __rmul__ = __mul__

    # -- multiplicative structure -------------------------------------------

    def wedge(self, other: "Form", geom: ProductGeometry | None = None) -> "Form":
        out: dict[Monomial, Scalar] = {}
        for lhs, c1 in self.terms.items():
            for rhs, c2 in other.terms.items():
                if (lhs.e1 and rhs.e1) or (lhs.e2 and rhs.e2):
                    continue
                mono = Monomial(
                    lhs.e1 | rhs.e1, lhs.e2 | rhs.e2, lhs.p + rhs.p, lhs.q + rhs.q
                )
                if geom is not None and not geom.admits(mono):
                    continue
                coeff = c1 * c2
                if lhs.e2 and rhs.e1:
                    # eta2 from the left factor crosses eta1 from the right
                    coeff = -coeff
                acc = out.get(mono)
                coeff = coeff if acc is None else acc + coeff
                if coeff:
                    out[mono] = coeff
                else:
                    out.pop(mono, None)
        result = Form.__new__(Form)
        result.terms = out
        return result

    def power(self, exponent: int, geom: ProductGeometry | None = None) -> "Form":
        if exponent < 0:
            raise ValueError("negative exponent")
        out = Form.one()
        for _ in range(exponent):
            out = out.wedge(self, geom)
        return out

    # -- quotients and substitution -------------------------------------------

    def truncate(self, geom: ProductGeometry) -> "Form":
        if not geom.truncate:
            return self
        result = Form.__new__(Form)
        result.terms = {m: c for m, c in self.terms.items() if geom.admits(m)}
        return result

    def map_scalars(self, fn) -> "Form":
        out = {}
        for mono, coeff in self.terms.items():
            c = fn(coeff)
            if c:
                out[mono] = c
        result = Form.__new__(Form)
        result.terms = out
        return result

    def reduce(self) -> "Form":
        """Apply the a_i*b_i = 0 ring reduction to every coefficient."""
        return self.map_scalars(lambda s: s.reduce())

    def substitute(self, assign: Mapping[str, RationalLike]) -> "Form":
        return self.map_scalars(lambda s: s.substitute(assign))

    def scale_params(self, lam: RationalLike) -> "Form":
        return self.map_scalars(lambda s: s.scale_params(lam))

    def __repr__(self) -> str:
        if not self.terms:
            return "Form(0)"
        names = ("eta1", "eta2", "Phi1", "Phi2")
        bits = []
        for mono in sorted(self.terms, key=lambda m: (m.degree(), m)):
            word = "*".join(
                f"{n}^{e}" if e > 1 else n for n, e in zip(names, mono) if e
            )
            bits.append(f"({self.terms[mono]!r})*{word or '1'}")
        return f"Form({' + '.join(bits)})"


ETA1 = Form.monomial(Monomial(1, 0, 0, 0))
ETA2 = Form.monomial(Monomial(0, 1, 0, 0))
PHI1 = Form.monomial(Monomial(0, 0, 1, 0))
PHI2 = Form.monomial(Monomial(0, 0, 0, 1))
