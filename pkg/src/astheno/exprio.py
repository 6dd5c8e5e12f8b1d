r"""Text grammar and JSON records for forms.

Grammar (whitespace insensitive)::

    form   := term (('+' | '-') term)*
    term   := atom (('*' | '/\') atom)*
    atom   := rational | param ('^' nat)? | generator ('^' nat)? | '(' form ')'

with params ``a1 b1 a2 b2``, generators ``eta1 eta2 Phi1 Phi2`` and rationals
``p/q`` (optional sign, no decimals).  ``*`` and ``/\`` are the same graded
product; scalars are degree-0 forms, so ``2*b1*a2*Phi2/\Phi1`` parses to the
canonical ``2*b1*a2*Phi1/\Phi2``.

Printing is deterministic (terms ordered by degree then exponent word,
coefficient monomials by exponent vector) and round-trips exactly:
``parse(print_text(f)) == f`` and ``from_record(to_record(f)) == f``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .algebra import Form, Monomial, UNIT_MONOMIAL
from .scalars import PARAMS, Scalar

GENERATORS = ("eta1", "eta2", "Phi1", "Phi2")

_GENERATOR_MONOMIALS = {
    "eta1": Monomial(1, 0, 0, 0),
    "eta2": Monomial(0, 1, 0, 0),
    "Phi1": Monomial(0, 0, 1, 0),
    "Phi2": Monomial(0, 0, 0, 1),
}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class RecordError(ValueError):
    def __init__(self, message: str, path: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# ---------------------------------------------------------------------------
# tokenizer


class _Token(NamedTuple):
    kind: str
    text: str
    line: int
    col: int


_SINGLE = {
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "^": "CARET",
    "(": "LPAREN",
    ")": "RPAREN",
}


def _tokenize(text: str) -> list:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("NUMBER", text[start:i], line, col))
            col += i - start
            continue
        if ch.isalpha():
            start = i
            while i < n and text[i].isalnum():
                i += 1
            tokens.append(_Token("IDENT", text[start:i], line, col))
            col += i - start
            continue
        if ch == "/":
            if i + 1 < n and text[i + 1] == "\\":
                tokens.append(_Token("WEDGE", "/\\", line, col))
                i += 2
                col += 2
            else:
                tokens.append(_Token("SLASH", "/", line, col))
                i += 1
                col += 1
            continue
        if ch in _SINGLE:
            tokens.append(_Token(_SINGLE[ch], ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str) -> None:
        tok = self.peek()
        what = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise ParseError(f"{message}, found {what}", tok.line, tok.col)

    def expect(self, kind: str, message: str) -> _Token:
        if self.peek().kind != kind:
            self.fail(message)
        return self.advance()

    def parse(self) -> Form:
        form = self.form()
        if self.peek().kind != "EOF":
            self.fail("unexpected trailing input")
        return form

    def form(self) -> Form:
        value = self.term()
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == "PLUS" else value - rhs
        return value

    def term(self) -> Form:
        value = self.atom()
        while self.peek().kind in ("STAR", "WEDGE"):
            self.advance()
            value = value.wedge(self.atom())
        return value

    def atom(self) -> Form:
        tok = self.peek()
        if tok.kind in ("MINUS", "PLUS"):
            sign = -1 if tok.kind == "MINUS" else 1
            self.advance()
            if self.peek().kind != "NUMBER":
                self.fail("expected a number after sign")
            return self.rational(sign)
        if tok.kind == "NUMBER":
            return self.rational(1)
        if tok.kind == "IDENT":
            return self.symbol()
        if tok.kind == "LPAREN":
            open_tok = self.advance()
            value = self.form()
            if self.peek().kind != "RPAREN":
                raise ParseError(
                    "unbalanced parenthesis", open_tok.line, open_tok.col
                )
            self.advance()
            return value
        self.fail("expected a rational, parameter, generator or '('")

    def rational(self, sign: int) -> Form:
        num = int(self.expect("NUMBER", "expected a number").text)
        value = Fraction(sign * num)
        if self.peek().kind == "SLASH":
            slash = self.advance()
            den_tok = self.expect("NUMBER", "expected a denominator")
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("zero denominator", slash.line, slash.col)
            value = Fraction(sign * num, den)
        return Form.from_scalar(value)

    def symbol(self) -> Form:
        tok = self.advance()
        name = tok.text
        if name in PARAMS:
            base = Form.from_scalar(Scalar.param(name))
        elif name in GENERATORS:
            base = Form.monomial(_GENERATOR_MONOMIALS[name])
        else:
            raise ParseError(f"unknown identifier {name!r}", tok.line, tok.col)
        if self.peek().kind == "CARET":
            caret = self.advance()
            if self.peek().kind == "MINUS":
                raise ParseError("negative exponent", caret.line, caret.col)
            exp_tok = self.expect("NUMBER", "expected an exponent")
            base = base.power(int(exp_tok.text))
        return base


def parse(text: str) -> Form:
    """Parse grammar text into a canonical form."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# printers


def _sorted_monomials(form: Form) -> list:
    return sorted(form.terms, key=lambda m: (m.degree(), m))


def _rational_text(value: Fraction) -> str:
    return str(value)


def _scalar_term_text(exps, coeff: Fraction) -> str:
    parts = []
    if coeff != 1 or not any(exps):
        parts.append(_rational_text(coeff))
    for name, e in zip(PARAMS, exps):
        if e:
            parts.append(f"{name}^{e}" if e > 1 else name)
    return "*".join(parts)


def _scalar_text(scalar: Scalar) -> str:
    entries = [
        _scalar_term_text(exps, scalar.terms[exps]) for exps in sorted(scalar.terms)
    ]
    if len(entries) == 1:
        return entries[0]
    joined = entries[0]
    for entry in entries[1:]:
        if entry.startswith("-"):
            joined += f" - {entry[1:]}"
        else:
            joined += f" + {entry}"
    return f"({joined})"


def _monomial_text(mono: Monomial) -> str:
    parts = []
    for name, e in zip(GENERATORS, mono):
        if e:
            parts.append(f"{name}^{e}" if e > 1 else name)
    return "/\\".join(parts)


def print_text(form: Form) -> str:
    """Deterministic grammar text; parse(print_text(f)) == f."""
    if form.is_zero:
        return "0"
    rendered = []
    for mono in _sorted_monomials(form):
        scalar = form.terms[mono]
        mono_str = _monomial_text(mono)
        if not mono_str:
            rendered.append(_scalar_text(scalar))
        elif scalar == Scalar.one():
            rendered.append(mono_str)
        else:
            rendered.append(f"{_scalar_text(scalar)}*{mono_str}")
    out = rendered[0]
    for entry in rendered[1:]:
        if entry.startswith("-"):
            out += f" - {entry[1:]}"
        else:
            out += f" + {entry}"
    return out


_PARAM_LATEX = {
    "a1": r"\alpha_1",
    "b1": r"\beta_1",
    "a2": r"\alpha_2",
    "b2": r"\beta_2",
}
_GENERATOR_LATEX = {
    "eta1": r"\eta_1",
    "eta2": r"\eta_2",
    "Phi1": r"\Phi_1",
    "Phi2": r"\Phi_2",
}


def _exponent_latex(e: int) -> str:
    return f"^{e}" if e < 10 else f"^{{{e}}}"


def _rational_latex(value: Fraction) -> str:
    sign = "-" if value < 0 else ""
    value = abs(value)
    if value.denominator == 1:
        return f"{sign}{value.numerator}"
    return f"{sign}\\frac{{{value.numerator}}}{{{value.denominator}}}"


def _scalar_term_latex(exps, coeff: Fraction) -> str:
    if not any(exps):
        return _rational_latex(coeff)
    if coeff == 1:
        head = ""
    elif coeff == -1:
        head = "-"
    else:
        head = _rational_latex(coeff)
    body = "".join(
        _PARAM_LATEX[name] + (_exponent_latex(e) if e > 1 else "")
        for name, e in zip(PARAMS, exps)
        if e
    )
    return head + body


def _scalar_latex(scalar: Scalar) -> str:
    entries = [
        _scalar_term_latex(exps, scalar.terms[exps]) for exps in sorted(scalar.terms)
    ]
    if len(entries) == 1:
        return entries[0]
    joined = entries[0]
    for entry in entries[1:]:
        joined += f" - {entry[1:]}" if entry.startswith("-") else f" + {entry}"
    return rf"\left({joined}\right)"


def _monomial_latex(mono: Monomial) -> str:
    parts = []
    for name, e in zip(GENERATORS, mono):
        if e:
            parts.append(_GENERATOR_LATEX[name] + (_exponent_latex(e) if e > 1 else ""))
    return r"\wedge".join(parts)


def print_latex(form: Form) -> str:
    if form.is_zero:
        return "0"
    rendered = []
    for mono in _sorted_monomials(form):
        scalar = form.terms[mono]
        mono_str = _monomial_latex(mono)
        if not mono_str:
            rendered.append(_scalar_latex(scalar))
            continue
        coeff_str = _scalar_latex(scalar)
        if coeff_str == "1":
            rendered.append(mono_str)
        elif coeff_str == "-1":
            rendered.append(f"-{mono_str}")
        else:
            rendered.append(f"{coeff_str}\\,{mono_str}")
    out = rendered[0]
    for entry in rendered[1:]:
        out += f" - {entry[1:]}" if entry.startswith("-") else f" + {entry}"
    return out


# ---------------------------------------------------------------------------
# JSON records


def to_record(form: Form) -> dict:
    """Lossless plain-dict encoding, deterministic field and term order."""
    terms = []
    for mono in _sorted_monomials(form):
        scalar = form.terms[mono]
        coeff = [
            {
                "a1": exps[0],
                "b1": exps[1],
                "a2": exps[2],
                "b2": exps[3],
                "num": scalar.terms[exps].numerator,
                "den": scalar.terms[exps].denominator,
            }
            for exps in sorted(scalar.terms)
        ]
        terms.append(
            {
                "eta1": mono.e1,
                "eta2": mono.e2,
                "phi1": mono.p,
                "phi2": mono.q,
                "coeff": coeff,
            }
        )
    return {"terms": terms}


def _require_int(value, path: str, minimum: int = 0, maximum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise RecordError(f"expected an integer, got {value!r}", path)
    if value < minimum:
        raise RecordError(f"expected >= {minimum}, got {value}", path)
    if maximum is not None and value > maximum:
        raise RecordError(f"expected <= {maximum}, got {value}", path)
    return value


def _require_keys(obj: dict, keys: set, path: str) -> None:
    if not isinstance(obj, dict):
        raise RecordError(f"expected an object, got {type(obj).__name__}", path)
    extra = set(obj) - keys
    if extra:
        raise RecordError(f"unknown fields {sorted(extra)}", path)
    missing = keys - set(obj)
    if missing:
        raise RecordError(f"missing fields {sorted(missing)}", path)


def from_record(record: dict) -> Form:
    _require_keys(record, {"terms"}, "$")
    terms = record["terms"]
    if not isinstance(terms, list):
        raise RecordError("expected a list", "$.terms")
    out: dict[Monomial, Scalar] = {}
    for i, term in enumerate(terms):
        path = f"$.terms[{i}]"
        _require_keys(term, {"eta1", "eta2", "phi1", "phi2", "coeff"}, path)
        mono = Monomial(
            _require_int(term["eta1"], f"{path}.eta1", maximum=1),
            _require_int(term["eta2"], f"{path}.eta2", maximum=1),
            _require_int(term["phi1"], f"{path}.phi1"),
            _require_int(term["phi2"], f"{path}.phi2"),
        )
        if mono in out:
            raise RecordError("duplicate monomial", path)
        coeff_entries = term["coeff"]
        if not isinstance(coeff_entries, list) or not coeff_entries:
            raise RecordError("expected a non-empty list", f"{path}.coeff")
        scalar_terms: dict = {}
        for j, entry in enumerate(coeff_entries):
            cpath = f"{path}.coeff[{j}]"
            _require_keys(entry, {"a1", "b1", "a2", "b2", "num", "den"}, cpath)
            exps = tuple(
                _require_int(entry[name], f"{cpath}.{name}") for name in PARAMS
            )
            if exps in scalar_terms:
                raise RecordError("duplicate exponent vector", cpath)
            if isinstance(entry["num"], bool) or not isinstance(entry["num"], int):
                raise RecordError(f"expected an integer, got {entry['num']!r}", f"{cpath}.num")
            if entry["num"] == 0:
                raise RecordError("zero coefficient is not stored", f"{cpath}.num")
            den = _require_int(entry["den"], f"{cpath}.den", minimum=1)
            scalar_terms[exps] = Fraction(entry["num"], den)
        out[mono] = Scalar(scalar_terms)
    return Form(out)
