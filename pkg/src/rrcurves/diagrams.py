"""Parametrized R-R diagram families, their words, and Seifert invariants.

Each family is a frozen dataclass.  JSON form is
``{"family": <name>, "params": {...}}`` with parameter names
n, s, a, b, c, d, nu, omega, p, q, epsilon.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import ClassVar

from .errors import (
    EmptyWord,
    GcdViolation,
    LinearRelationViolation,
    NormalizesToRect,
    NoWordRealization,
    NotCoprime,
    PreconditionViolation,
    RangeViolation,
    UnknownFamily,
    ValidationError,
)
from .notation import format_word
from .words import (
    AbVector,
    Mat2,
    Word,
    abelianize,
    balanced_product,
    christoffel_pattern,
    free_reduce,
    perp_coefficient,
    snf_diag,
    substitute,
    unimodular_partner,
)

A = Word([0])
B = Word([2])
A_INV = Word([1])


def _pow(gen: str, k: int) -> Word:
    return Word.power(gen, k)


# ---------------------------------------------------------------- families

FAMILIES: dict[str, type["DiagramForm"]] = {}


@dataclass(frozen=True)
class DiagramForm:
    family: ClassVar[str] = ""

    def __init_subclass__(cls, **kw):
        super().__init_subclass__(**kw)
        FAMILIES[cls.family] = cls

    def params(self) -> dict[str, int]:
        return dataclasses.asdict(self)

    def to_dict(self):
        return {"family": self.family, "params": self.params()}

    def check(self):
        """Raise the first violated constraint; subclasses extend."""

    def _range(self, ok: bool, constraint: str):
        if not ok:
            raise RangeViolation(self.family, constraint)

    def _gcd(self, x: int, y: int, constraint: str):
        if gcd(x, y) != 1:
            raise GcdViolation(self.family, constraint)

    def _linear(self, ok: bool, constraint: str):
        if not ok:
            raise LinearRelationViolation(self.family, constraint)


@dataclass(frozen=True)
class PrimitiveFig1(DiagramForm):
    family: ClassVar[str] = "PrimitiveFig1"


@dataclass(frozen=True)
class SeifertDRect(DiagramForm):
    family: ClassVar[str] = "SeifertDRect"
    n: int
    s: int

    def check(self):
        self._range(self.n >= 2, "n >= 2")
        self._range(self.s >= 2, "s >= 2")


@dataclass(frozen=True)
class SeifertDGen(DiagramForm):
    family: ClassVar[str] = "SeifertDGen"
    n: int
    s: int
    a: int
    b: int

    def check(self):
        self._range(self.n >= 2, "n >= 2")
        self._range(self.s >= 2, "s >= 2")
        self._range(self.a >= 1, "a >= 1")
        self._range(self.b >= 1, "b >= 1")
        self._gcd(self.a, self.b, "gcd(a, b) = 1")


@dataclass(frozen=True)
class SeifertM(DiagramForm):
    family: ClassVar[str] = "SeifertM"
    s: int

    def check(self):
        self._range(self.s >= 1, "s >= 1")


@dataclass(frozen=True)
class PPTypeI(DiagramForm):
    family: ClassVar[str] = "PPTypeI"


@dataclass(frozen=True)
class PPTypeII(DiagramForm):
    family: ClassVar[str] = "PPTypeII"
    s: int

    def check(self):
        self._range(self.s >= 2, "s >= 2")


@dataclass(frozen=True)
class PPTypeIII(DiagramForm):
    family: ClassVar[str] = "PPTypeIII"
    s: int
    a: int
    b: int

    def check(self):
        self._range(self.s >= 1, "s >= 1")
        self._range(self.a >= 1, "a >= 1")
        self._range(self.b >= 1, "b >= 1")


@dataclass(frozen=True)
class PPTypeIV(DiagramForm):
    family: ClassVar[str] = "PPTypeIV"
    a: int
    b: int
    c: int

    def check(self):
        for name in ("a", "b", "c"):
            self._range(getattr(self, name) >= 1, f"{name} >= 1")


@dataclass(frozen=True)
class PPTypeV(DiagramForm):
    family: ClassVar[str] = "PPTypeV"
    a: int
    b: int
    c: int
    d: int

    def check(self):
        for name in ("a", "b", "c", "d"):
            self._range(getattr(self, name) >= 1, f"{name} >= 1")


@dataclass(frozen=True)
class LemmaPPower5(DiagramForm):
    family: ClassVar[str] = "LemmaPPower5"
    s: int
    epsilon: int
    a: int
    b: int

    def check(self):
        self._range(self.epsilon in (1, -1), "epsilon in {+1, -1}")
        self._range(min(self.s, self.s + self.epsilon) >= 1, "min(s, s + epsilon) >= 1")
        self._range(self.a >= 1, "a >= 1")
        self._range(self.b >= 1, "b >= 1")
        self._gcd(self.a, self.b, "gcd(a, b) = 1")


@dataclass(frozen=True)
class BRZRect(DiagramForm):
    family: ClassVar[str] = "BRZRect"
    nu: int
    omega: int
    p: int
    q: int

    def check(self):
        self._range(0 < self.nu < self.p, "0 < nu < p")
        self._range(0 < self.omega < self.q, "0 < omega < q")
        self._gcd(self.nu, self.p, "gcd(nu, p) = 1")
        self._gcd(self.omega, self.q, "gcd(omega, q) = 1")


@dataclass(frozen=True)
class BRZSForm(DiagramForm):
    family: ClassVar[str] = "BRZSForm"
    nu: int
    omega: int
    p: int
    q: int
    a: int
    b: int
    n: int

    def check(self):
        self._range(1 < self.nu < self.p, "1 < nu < p")
        self._range(0 < self.omega < self.q, "0 < omega < q")
        for name in ("a", "b", "n"):
            self._range(getattr(self, name) >= 1, f"{name} >= 1")
        self._linear(self.a + self.b == self.nu, "a + b = nu")
        self._linear(self.n * self.nu + self.a == self.p, "n*nu + a = p")
        self._gcd(self.nu, self.p, "gcd(nu, p) = 1")
        self._gcd(self.omega, self.q, "gcd(omega, q) = 1")


@dataclass(frozen=True)
class BRZTForm(DiagramForm):
    family: ClassVar[str] = "BRZTForm"
    nu: int
    omega: int
    p: int
    q: int
    a: int
    b: int
    n: int

    def check(self):
        self._range(0 < self.nu < self.p, "0 < nu < p")
        self._range(1 < self.omega < self.q, "1 < omega < q")
        for name in ("a", "b", "n"):
            self._range(getattr(self, name) >= 1, f"{name} >= 1")
        self._linear(self.a + self.b == self.omega, "a + b = omega")
        self._linear(self.n * self.omega + self.a == self.q, "n*omega + a = q")
        self._gcd(self.nu, self.p, "gcd(nu, p) = 1")
        self._gcd(self.omega, self.q, "gcd(omega, q) = 1")


BRZ_FAMILIES = (BRZRect, BRZSForm, BRZTForm)


def validate(f: DiagramForm) -> DiagramForm:
    f.check()
    return f


def form_from_dict(data) -> DiagramForm:
    """Build and validate a form from its JSON object."""
    if not isinstance(data, dict) or "family" not in data:
        raise ValidationError("?", 'expected {"family": ..., "params": {...}}')
    name = data["family"]
    cls = FAMILIES.get(name)
    if cls is None:
        raise UnknownFamily(f"unknown family {name!r}; known: {sorted(FAMILIES)}")
    params = data.get("params", {}) or {}
    if not isinstance(params, dict):
        raise ValidationError(name, "params must be an object")
    fields = [f.name for f in dataclasses.fields(cls)]
    missing = [k for k in fields if k not in params]
    extra = [k for k in params if k not in fields]
    if missing or extra:
        raise ValidationError(name, f"expected params {fields}; missing {missing}, unexpected {extra}")
    for k, v in params.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(name, f"parameter {k} must be an integer")
    return validate(cls(**params))


# ---------------------------------------------------------------- words


def wmn(m: int, n: int) -> Word:
    """Primitive word with abelianization (m, n): a Christoffel word in A^+-1, B^+-1."""
    if (m, n) == (0, 0) or gcd(abs(m), abs(n)) != 1:
        raise NotCoprime(f"({m}, {n}) is not a primitive vector")
    x = _pow("A", 1 if m >= 0 else -1)
    y = _pow("B", 1 if n >= 0 else -1)
    out = Word()
    for is_y in christoffel_pattern(abs(m), abs(n)):
        out = out * (y if is_y else x)
    return out


def evaluate_wmn(m: int, n: int, x: Word, y: Word) -> Word:
    """W_{m,n}(x, y): substitute x for A and y for B in ``wmn(m, n)``."""
    return substitute(wmn(m, n), x, y)


def lemma_ppower5_blocks(f: LemmaPPower5) -> tuple[Word, Word, int, int]:
    """The two subwords and their multiplicities (a - eta, eta), b = rho*a + eta."""
    rho, eta = divmod(f.b, f.a)
    head = _pow("A", 1) * _pow("B", f.s + f.epsilon)
    unit = _pow("A", 1) * _pow("B", f.s)
    return head * unit ** rho, head * unit ** (rho + 1), f.a - eta, eta


def realize_word(f: DiagramForm) -> Word:
    validate(f)
    if isinstance(f, PrimitiveFig1):
        return A
    if isinstance(f, SeifertDRect):
        return _pow("A", f.n) * _pow("B", f.s)
    if isinstance(f, SeifertDGen):
        x = _pow("A", f.n) * _pow("B", f.s)
        y = _pow("A", f.n + 1) * _pow("B", f.s)
        return balanced_product(x, y, f.a, f.b)
    if isinstance(f, SeifertM):
        return A * _pow("B", f.s) * A_INV * _pow("B", f.s)
    if isinstance(f, PPTypeII):
        return _pow("B", f.s)
    if isinstance(f, PPTypeIII):
        return (A * _pow("B", f.s)) ** (f.a + f.b)
    if isinstance(f, PPTypeIV):
        return (A * B) ** (f.a + f.b + f.c)
    if isinstance(f, LemmaPPower5):
        x, y, cx, cy = lemma_ppower5_blocks(f)
        return balanced_product(x, y, cx, cy)
    if isinstance(f, BRZRect):
        return _pow("A", f.p) * _pow("B", -f.q)
    if isinstance(f, BRZSForm):
        return evaluate_wmn(f.p, f.nu, A_INV, _pow("B", f.q))
    if isinstance(f, BRZTForm):
        return evaluate_wmn(f.q, f.omega, A_INV, _pow("B", f.p))
    raise NoWordRealization(f"{f.family} has no word realization")


# ---------------------------------------------------------------- classes


@dataclass(frozen=True)
class Primitive:
    kind: ClassVar[str] = "primitive"

    def to_dict(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class ProperPower:
    root: Word | None
    exponent: int | None
    kind: ClassVar[str] = "proper_power"

    def to_dict(self):
        return {
            "kind": self.kind,
            "root": None if self.root is None else format_word(self.root),
            "exponent": self.exponent,
        }


@dataclass(frozen=True)
class SeifertD:
    indexes: tuple[int, int]
    kind: ClassVar[str] = "seifert_d"

    def __post_init__(self):
        object.__setattr__(self, "indexes", tuple(sorted(self.indexes)))

    def to_dict(self):
        return {"kind": self.kind, "indexes": list(self.indexes)}


MOBIUS_S1_NOTE = (
    "Seifert-fibered over the Mobius band with no exceptional fiber; "
    "also Seifert-fibered over D^2 with two exceptional fibers of index 2"
)


@dataclass(frozen=True)
class SeifertMClass:
    index: int | None  # None: no exceptional fiber
    note: str | None = None
    kind: ClassVar[str] = "seifert_m"

    def to_dict(self):
        d = {"kind": self.kind, "index": self.index}
        if self.index is None:
            d["exceptional_fiber"] = "none"
            d["alternative_fibration"] = {"base": "D2", "indexes": [2, 2]}
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class Neither:
    kind: ClassVar[str] = "neither"

    def to_dict(self):
        return {"kind": self.kind}


CurveClass = Primitive | ProperPower | SeifertD | SeifertMClass | Neither


def seifert_d_index(n: int, a: int, b: int) -> int:
    return n * (a + b) + b


def classify_form(f: DiagramForm) -> CurveClass:
    validate(f)
    if isinstance(f, (PrimitiveFig1, LemmaPPower5)):
        return Primitive()
    if isinstance(f, SeifertDRect):
        return SeifertD((f.n, f.s))
    if isinstance(f, SeifertDGen):
        return SeifertD((seifert_d_index(f.n, f.a, f.b), f.s))
    if isinstance(f, SeifertM):
        if f.s == 1:
            return SeifertMClass(None, MOBIUS_S1_NOTE)
        return SeifertMClass(f.s)
    if isinstance(f, PPTypeII):
        return ProperPower(B, f.s)
    if isinstance(f, PPTypeIII):
        return ProperPower(A * _pow("B", f.s), f.a + f.b)
    if isinstance(f, PPTypeIV):
        return ProperPower(A * B, f.a + f.b + f.c)
    if isinstance(f, (PPTypeI, PPTypeV)):
        return ProperPower(None, None)
    if isinstance(f, BRZ_FAMILIES):
        return SeifertD((f.p, f.q))
    raise UnknownFamily(f.family)


# ---------------------------------------------------------------- invariants


@dataclass(frozen=True)
class FiberType:
    numerator: int
    denominator: int

    def __post_init__(self):
        if not 0 < self.numerator < self.denominator or gcd(self.numerator, self.denominator) != 1:
            raise RangeViolation("FiberType", "0 < numerator < denominator, coprime")

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def fiber_types(f) -> tuple[FiberType, FiberType]:
    if not isinstance(f, BRZ_FAMILIES):
        raise PreconditionViolation(f"fiber types are defined for BRZ forms, not {f.family}")
    validate(f)
    return FiberType(f.nu, f.p), FiberType(f.omega, f.q)


def regular_fiber(f) -> tuple[Word, ...]:
    """Regular fiber word(s); a second entry only where the diagram is symmetric."""
    validate(f)
    if isinstance(f, SeifertDRect):
        return _pow("B", f.s), _pow("A", f.n)
    if isinstance(f, (SeifertDGen, SeifertM)):
        return (_pow("B", f.s),)
    if isinstance(f, BRZRect):
        return _pow("B", f.q), _pow("A", f.p)
    if isinstance(f, BRZSForm):
        return (_pow("B", f.q),)
    if isinstance(f, BRZTForm):
        return (_pow("B", f.p),)
    raise PreconditionViolation(f"{f.family} carries no Seifert fibration")


def index_via_perp(f: SeifertDGen) -> int:
    """Exceptional-fiber index from U = (n(a+b)+b, a+b), W = (0, 1)."""
    validate(f)
    U = AbVector(seifert_d_index(f.n, f.a, f.b), f.a + f.b)
    V = unimodular_partner(U)
    return abs(perp_coefficient(U, V, AbVector(0, 1)))


def homology_check(alpha: Word, beta: Word) -> tuple[int, int]:
    """H_1 after adding 2-handles along alpha and beta, as SNF diagonal."""
    if not free_reduce(alpha) or not free_reduce(beta):
        raise EmptyWord("homology_check needs nontrivial words")
    return snf_diag(Mat2.from_rows(abelianize(alpha), abelianize(beta)))


def normalize_brz(f):
    """Trade an n = 1 S-form (or T-form) for the equivalent form with n > 1.

    With b = rho*a + r the cutting-disk change A^-1 -> A^-1 B^-q turns the
    runs of A^-1 into lengths rho+2 and rho+3, giving (for the S-form)
    nu' = a = p - nu, n' = rho + 2, a' = r, b' = a - r, omega' = q - omega.
    """
    if not isinstance(f, (BRZSForm, BRZTForm)):
        raise PreconditionViolation(f"normalize_brz takes BRZSForm or BRZTForm, not {f.family}")
    validate(f)
    if f.n != 1:
        raise PreconditionViolation(f"n = {f.n}; only n = 1 forms are normalized")
    rho, r = divmod(f.b, f.a)
    if r == 0:
        raise NormalizesToRect(f"{f.family} with a = 1 is homeomorphic to the rectangular form")
    if isinstance(f, BRZSForm):
        out = BRZSForm(
            nu=f.p - f.nu, omega=f.q - f.omega, p=f.p, q=f.q, a=r, b=f.a - r, n=rho + 2
        )
    else:
        out = BRZTForm(
            nu=f.p - f.nu, omega=f.q - f.omega, p=f.p, q=f.q, a=r, b=f.a - r, n=rho + 2
        )
    return validate(out)


def brz_change_of_disks(f) -> tuple[Word, Word]:
    """Images of (A, B) for the cutting-disk change A^-1 -> A^-1 B^-k used on n = 1 forms."""
    k = f.q if isinstance(f, BRZSForm) else f.p
    return _pow("B", k) * A, B
