"""Structure-dependent vanishing verdicts, table reproduction, and scans.

A product factor is described by its structure kind; the kinds pin some of
the four parameters to zero and declare others structurally nonvanishing:

    sasakian        alpha != 0, beta = 0
    kenmotsu        alpha = 0,  beta != 0
    cosymplectic    alpha = 0,  beta = 0
    trans-sasakian  both free

Verdicts never report a vanishing condition that contradicts a structural
nonzero (a kenmotsu factor cannot have beta = 0), so the conditional search
is filtered accordingly.  :func:`analyze_residual` is the unfiltered variant
used by the audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import fixtures
from .algebra import Form, ProductGeometry
from .calculus import Condition, Convention, condition_tensor
from .scalars import PARAMS, Scalar

PURE_KINDS = ("sasakian", "kenmotsu", "cosymplectic")
KINDS = PURE_KINDS + ("trans-sasakian",)

VERDICT_ZERO = "identically-zero"
VERDICT_NONZERO = "nonzero"
VERDICT_CONDITIONAL = "conditionally-zero"


@dataclass(frozen=True)
class FactorStructure:
    """One almost-contact factor: structure kind plus optional numeric pins."""

    kind: str
    alpha: Fraction | int | None = None
    beta: Fraction | int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown structure kind {self.kind!r}")
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if value is not None and not isinstance(value, (int, Fraction)):
                raise TypeError(f"{name} pin must be rational, got {type(value).__name__}")
        for name in self.zero_names():
            value = getattr(self, name)
            if value is not None and value != 0:
                raise ValueError(f"{self.kind} forces {name} = 0, cannot pin {name} = {value}")
        for name in self.nonzero_names():
            if getattr(self, name) == 0:
                raise ValueError(f"{self.kind} has {name} != 0, cannot pin {name} = 0")

    def zero_names(self) -> tuple:
        if self.kind == "sasakian":
            return ("beta",)
        if self.kind == "kenmotsu":
            return ("alpha",)
        if self.kind == "cosymplectic":
            return ("alpha", "beta")
        return ()

    def nonzero_names(self) -> tuple:
        if self.kind == "sasakian":
            return ("alpha",)
        if self.kind == "kenmotsu":
            return ("beta",)
        return ()


@dataclass(frozen=True)
class StructurePair:
    factor1: FactorStructure
    factor2: FactorStructure

    def assignment(self) -> dict:
        """Numeric substitution implied by the kinds and any explicit pins."""
        out: dict[str, Fraction] = {}
        for idx, factor in ((1, self.factor1), (2, self.factor2)):
            slots = {"alpha": f"a{idx}", "beta": f"b{idx}"}
            for name in factor.zero_names():
                out[slots[name]] = Fraction(0)
            for name, param in slots.items():
                value = getattr(factor, name)
                if value is not None:
                    out[param] = Fraction(value)
        return out

    def forbidden_zero_params(self) -> frozenset:
        """Parameters no conditional verdict may set to zero."""
        names = set()
        for idx, factor in ((1, self.factor1), (2, self.factor2)):
            slots = {"alpha": f"a{idx}", "beta": f"b{idx}"}
            for name in factor.nonzero_names():
                names.add(slots[name])
        return frozenset(names)


def pure_pair(kind1: str, kind2: str) -> StructurePair:
    return StructurePair(FactorStructure(kind1), FactorStructure(kind2))


class Relation:
    """One linear constraint on the parameters, applied scalar by scalar."""

    __slots__ = ("label", "params", "_fn")

    def __init__(self, label: str, params: frozenset, fn: Callable[[Scalar], Scalar]):
        self.label = label
        self.params = params
        self._fn = fn

    def apply(self, form: Form) -> Form:
        return form.map_scalars(self._fn)

    def __repr__(self) -> str:
        return f"Relation({self.label})"


def _zero_relation(param: str) -> Relation:
    return Relation(f"{param}=0", frozenset((param,)), lambda s, _p=param: s.substitute({_p: 0}))


def _tie_relation(src: str, dst: str, sign: int) -> Relation:
    head = "-" if sign < 0 else ""
    return Relation(
        f"{src}={head}{dst}",
        frozenset((src, dst)),
        lambda s, _s=src, _d=dst, _g=sign: s.identify(_s, _d, _g),
    )


def candidate_relations(residual: Form, forbidden: frozenset = frozenset()) -> tuple:
    """Zero pins for the parameters present, then the proportionality ties."""
    present = residual.params_present()
    rels = [_zero_relation(p) for p in PARAMS if p in present and p not in forbidden]
    for src, dst in (("a1", "a2"), ("b1", "b2")):
        if src in present and dst in present:
            rels.append(_tie_relation(src, dst, 1))
            rels.append(_tie_relation(src, dst, -1))
    return tuple(rels)


@dataclass(frozen=True)
class VanishingAnalysis:
    """Every candidate relation tested against a nonzero residual.

    singles holds (label, annihilates) per candidate; pairs holds labels of
    minimal two-relation annihilators built from parameter-disjoint singles
    that both failed alone.
    """

    singles: tuple
    pairs: tuple

    @property
    def annihilating(self) -> tuple:
        hits = tuple(label for label, ok in self.singles if ok)
        return hits if hits else self.pairs


def analyze_residual(
    residual: Form,
    forbidden: frozenset = frozenset(),
    ring_reduce: bool = True,
) -> VanishingAnalysis:
    # ties can resurrect reducible words (b1 -> b2 maps a2*b1 onto a2*b2),
    # so reduction reruns after every application
    post = (lambda f: f.reduce()) if ring_reduce else (lambda f: f)
    singles = []
    failed = []
    for rel in candidate_relations(residual, forbidden):
        if post(rel.apply(residual)).is_zero:
            singles.append((rel.label, True))
        else:
            singles.append((rel.label, False))
            failed.append(rel)
    pairs = []
    for i, first in enumerate(failed):
        for second in failed[i + 1 :]:
            if first.params & second.params:
                continue
            if post(second.apply(first.apply(residual))).is_zero:
                pairs.append(f"{first.label} & {second.label}")
    return VanishingAnalysis(tuple(singles), tuple(pairs))


def _verdict(residual: Form, forbidden: frozenset, ring_reduce: bool):
    if residual.is_zero:
        return VERDICT_ZERO, VanishingAnalysis((), ())
    analysis = analyze_residual(residual, forbidden, ring_reduce)
    verdict = VERDICT_CONDITIONAL if analysis.annihilating else VERDICT_NONZERO
    return verdict, analysis


@dataclass(frozen=True)
class ClassificationReport:
    condition: Condition
    geometry: ProductGeometry
    pair: StructurePair
    convention: Convention
    ring_reduce: bool
    residual: Form
    verdict: str
    analysis: VanishingAnalysis

    @property
    def vanishes(self) -> bool:
        return self.verdict == VERDICT_ZERO

    @property
    def conditions(self) -> tuple:
        return self.analysis.annihilating


def classify(
    condition: Condition | str,
    geom: ProductGeometry,
    pair: StructurePair,
    convention: Convention | str = Convention.GRADED,
    ring_reduce: bool = True,
) -> ClassificationReport:
    """Verdict on the named vanishing condition for one structured product.

    Ring reduction runs before the numeric pins so the quotient by the
    integrability ideal wins over a contradictory pin.
    """
    condition = Condition(condition)
    convention = Convention(convention)
    tensor = condition_tensor(condition, geom, convention)
    if ring_reduce:
        tensor = tensor.reduce()
    residual = tensor.substitute(pair.assignment())
    verdict, analysis = _verdict(residual, pair.forbidden_zero_params(), ring_reduce)
    return ClassificationReport(
        condition=condition,
        geometry=geom,
        pair=pair,
        convention=convention,
        ring_reduce=ring_reduce,
        residual=residual,
        verdict=verdict,
        analysis=analysis,
    )


ROW_STATUSES = (
    "exact",
    "modulo-truncation",
    "modulo-convention",
    "modulo-convention-truncation",
    "discrepancy",
)


@dataclass(frozen=True)
class RowReport:
    row: int
    factor1: str
    factor2: str
    status: str
    printed_zero: bool
    engine_zero_truncated: bool
    fixture: Form
    engine: Form
    engine_truncated: Form
    diff: Form
    note: str | None


@dataclass(frozen=True)
class TableReport:
    table_id: int
    m1: int
    m2: int
    power: int
    convention: Convention
    rows: tuple

    @property
    def discrepancies(self) -> tuple:
        return tuple(r.row for r in self.rows if r.status == "discrepancy")

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def _other(convention: Convention) -> Convention:
    return Convention.UNGRADED if convention is Convention.GRADED else Convention.GRADED


def reproduce_table(table_id: int, convention: Convention | str = Convention.GRADED) -> TableReport:
    """Recompute one bundled table and grade every printed row.

    Rows are compared untruncated against the requested convention first,
    then truncated, then against the other convention, so the status names
    exactly which lens (if any) makes the printed value an engine value.
    """
    convention = Convention(convention)
    table = fixtures.load_table(table_id)
    geom = table.geometry
    free = geom.untruncated()
    primary = condition_tensor(Condition.ASTHENO, free, convention)
    shadow = condition_tensor(Condition.ASTHENO, free, _other(convention))
    rows = []
    for fixture_row in table.rows:
        sub = fixture_row.zero_substitution()
        engine = primary.substitute(sub)
        other = shadow.substitute(sub)
        expected = fixture_row.form
        if expected == engine:
            status = "exact"
        elif expected.truncate(geom) == engine.truncate(geom):
            status = "modulo-truncation"
        elif expected == other:
            status = "modulo-convention"
        elif expected.truncate(geom) == other.truncate(geom):
            status = "modulo-convention-truncation"
        else:
            status = "discrepancy"
        rows.append(
            RowReport(
                row=fixture_row.row,
                factor1=fixture_row.factor1,
                factor2=fixture_row.factor2,
                status=status,
                printed_zero=fixture_row.is_printed_zero,
                engine_zero_truncated=engine.truncate(geom).is_zero,
                fixture=expected,
                engine=engine,
                engine_truncated=engine.truncate(geom),
                diff=expected - engine,
                note=fixture_row.note,
            )
        )
    return TableReport(table.table_id, table.m1, table.m2, table.power, convention, tuple(rows))


@dataclass(frozen=True)
class ScanCell:
    m1: int
    m2: int
    factor1: str
    factor2: str
    verdict: str
    conditions: tuple


@dataclass(frozen=True)
class Proposition:
    name: str
    statement: str
    holds: bool
    counterexamples: tuple


@dataclass(frozen=True)
class ScanReport:
    condition: Condition
    convention: Convention
    max_m1: int
    max_m2: int
    cells: tuple
    propositions: tuple

    @property
    def ok(self) -> bool:
        return all(p.holds for p in self.propositions)


def _cosymplectic_only(cells) -> Proposition:
    bad = tuple(
        cell
        for cell in cells
        if cell.m1 >= 2
        and cell.m2 >= 2
        and (cell.factor1 == cell.factor2 == "cosymplectic") != (cell.verdict == VERDICT_ZERO)
    )
    return Proposition(
        name="cosymplectic-only",
        statement=(
            "once both factors have half-dimension at least 2, the tensor "
            "vanishes identically only for a cosymplectic pair"
        ),
        holds=not bad,
        counterexamples=bad,
    )


def _unit_sasakian_cosymplectic(cells) -> Proposition:
    bad = []
    for cell in cells:
        kinds = sorted((cell.factor1, cell.factor2))
        if kinds != ["cosymplectic", "sasakian"]:
            continue
        sas_halfdim = cell.m1 if cell.factor1 == "sasakian" else cell.m2
        if (sas_halfdim == 1) != (cell.verdict == VERDICT_ZERO):
            bad.append(cell)
    return Proposition(
        name="unit-sasakian-cosymplectic",
        statement=(
            "a sasakian times cosymplectic product vanishes exactly when the "
            "sasakian factor has half-dimension 1"
        ),
        holds=not bad,
        counterexamples=tuple(bad),
    )


def scan(
    max_m1: int = 3,
    max_m2: int = 3,
    condition: Condition | str = Condition.ASTHENO,
    convention: Convention | str = Convention.GRADED,
    ring_reduce: bool = True,
) -> ScanReport:
    """Verdict matrix over the pure structure pairs and half-dimensions.

    The tensor is computed once per geometry and substituted per pair. The
    two bundled propositions are evaluated over the scanned range when the
    condition is astheno; other conditions carry no propositions.
    """
    condition = Condition(condition)
    convention = Convention(convention)
    cells = []
    for m1 in range(1, max_m1 + 1):
        for m2 in range(1, max_m2 + 1):
            geom = ProductGeometry(m1, m2)
            tensor = condition_tensor(condition, geom, convention)
            if ring_reduce:
                tensor = tensor.reduce()
            for kind1 in PURE_KINDS:
                for kind2 in PURE_KINDS:
                    pair = pure_pair(kind1, kind2)
                    residual = tensor.substitute(pair.assignment())
                    verdict, analysis = _verdict(
                        residual, pair.forbidden_zero_params(), ring_reduce
                    )
                    cells.append(
                        ScanCell(m1, m2, kind1, kind2, verdict, analysis.annihilating)
                    )
    cells = tuple(cells)
    if condition is Condition.ASTHENO:
        propositions = (_cosymplectic_only(cells), _unit_sasakian_cosymplectic(cells))
    else:
        propositions = ()
    return ScanReport(condition, convention, max_m1, max_m2, cells, propositions)
