"""Exact rational polynomials in the four structure constants a1, b1, a2, b2.

These scalars are the coefficient ring for every differential form in the
engine.  (a_i, b_i) are the (alpha, beta) constants of the i-th factor
structure.  The quotient relations a1*b1 = 0 and a2*b2 = 0 (a trans-Sasakian
factor of dimension >= 5 is alpha-Sasakian, beta-Kenmotsu or cosymplectic,
so the product alpha*beta always vanishes) are applied only on demand through
:meth:`Scalar.reduce`, never implicitly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

PARAMS = ("a1", "b1", "a2", "b2")

# exponent vector over (a1, b1, a2, b2)
Exps = tuple
RationalLike = Union[int, Fraction]

_UNIT: Exps = (0, 0, 0, 0)


def _is_mixed(exps: Exps) -> bool:
    # dropped by ring reduction: mixes a_i with b_i for the same factor
    return bool(exps[0] and exps[1]) or bool(exps[2] and exps[3])


class Scalar:
    """Sparse polynomial, exponent vector -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exps, RationalLike] | None = None):
        data: dict[Exps, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    data[tuple(exps)] = c
        self.terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls({_UNIT: 1})

    @classmethod
    def rational(cls, value: RationalLike) -> "Scalar":
        return cls({_UNIT: Fraction(value)})

    @classmethod
    def param(cls, name: str) -> "Scalar":
        if name not in PARAMS:
            raise ValueError(f"unknown parameter {name!r}")
        exps = [0, 0, 0, 0]
        exps[PARAMS.index(name)] = 1
        return cls({tuple(exps): 1})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Scalar.rational(other)
        return NotImplemented

    def constant_value(self) -> Fraction | None:
        """The value of a constant polynomial, or None if non-constant."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {_UNIT}:
            return self.terms[_UNIT]
        return None

    def params_present(self) -> frozenset:
        out = set()
        for exps in self.terms:
            for name, e in zip(PARAMS, exps):
                if e:
                    out.add(name)
        return frozenset(out)

    def degrees(self) -> frozenset:
        return frozenset(sum(exps) for exps in self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Scalar | RationalLike") -> "Scalar":
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps, 0) + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        result = Scalar.__new__(Scalar)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        result = Scalar.__new__(Scalar)
        result.terms = {exps: -coeff for exps, coeff in self.terms.items()}
        return result

    def __sub__(self, other: "Scalar | RationalLike") -> "Scalar":
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Scalar | RationalLike") -> "Scalar":
        return (-self) + other

    def __mul__(self, other: "Scalar | RationalLike") -> "Scalar":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return Scalar.zero()
            result = Scalar.__new__(Scalar)
            result.terms = {e: c * other for e, c in self.terms.items()}
            return result
        if not isinstance(other, Scalar):
            return NotImplemented
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                acc = out.get(exps, 0) + c1 * c2
                if acc:
                    out[exps] = acc
                else:
                    out.pop(exps, None)
        result = Scalar.__new__(Scalar)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            raise ValueError("negative exponent")
        out = Scalar.one()
        for _ in range(exponent):
            out = out * self
        return out

    # -- ring reduction and substitution -----------------------------------

    def reduce(self) -> "Scalar":
        """Project onto the quotient by (a1*b1, a2*b2)."""
        result = Scalar.__new__(Scalar)
        result.terms = {e: c for e, c in self.terms.items() if not _is_mixed(e)}
        return result

    def substitute(self, assign: Mapping[str, RationalLike]) -> "Scalar":
        """Partially evaluate: pinned parameters get values, others stay."""
        for name in assign:
            if name not in PARAMS:
                raise ValueError(f"unknown parameter {name!r}")
        out: dict[Exps, Fraction] = {}
        for exps, coeff in self.terms.items():
            new_exps = list(exps)
            for idx, name in enumerate(PARAMS):
                if name in assign and exps[idx]:
                    coeff = coeff * Fraction(assign[name]) ** exps[idx]
                    new_exps[idx] = 0
                    if not coeff:
                        break
            if not coeff:
                continue
            key = tuple(new_exps)
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        result = Scalar.__new__(Scalar)
        result.terms = out
        return result

    def identify(self, src: str, dst: str, sign: int = 1) -> "Scalar":
        """Impose src = sign*dst by eliminating src in favour of dst."""
        if src == dst:
            raise ValueError("src and dst must differ")
        si, di = PARAMS.index(src), PARAMS.index(dst)
        out: dict[Exps, Fraction] = {}
        for exps, coeff in self.terms.items():
            new_exps = list(exps)
            if exps[si]:
                coeff = coeff * Fraction(sign) ** exps[si]
                new_exps[di] += exps[si]
                new_exps[si] = 0
            key = tuple(new_exps)
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        result = Scalar.__new__(Scalar)
        result.terms = out
        return result

    def evaluate(self, values: Mapping[str, RationalLike]) -> Fraction:
        """Total evaluation; every parameter that occurs must be given."""
        missing = self.params_present() - set(values)
        if missing:
            raise ValueError(f"missing values for {sorted(missing)}")
        vals = [Fraction(values.get(name, 0)) for name in PARAMS]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def scale_params(self, lam: RationalLike) -> "Scalar":
        """Substitute lam*param for every parameter simultaneously."""
        lam = Fraction(lam)
        result = Scalar.__new__(Scalar)
        result.terms = {e: c * lam ** sum(e) for e, c in self.terms.items()}
        if not lam:
            result.terms = {e: c for e, c in result.terms.items() if c}
        return result

    def __repr__(self) -> str:
        if not self.terms:
            return "Scalar(0)"
        bits = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            mono = "*".join(
                f"{n}^{e}" if e > 1 else n for n, e in zip(PARAMS, exps) if e
            )
            bits.append(f"{coeff}*{mono}" if mono else str(coeff))
        return f"Scalar({' + '.join(bits)})"


ONE = Scalar.one()
ZERO = Scalar.zero()
A1 = Scalar.param("a1")
B1 = Scalar.param("b1")
A2 = Scalar.param("a2")
B2 = Scalar.param("b2")
