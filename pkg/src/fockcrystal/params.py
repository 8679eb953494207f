"""Exact parameter model for cyclotomic rational Cherednik categories O.

A parameter set for G(l,1,n) is a nonzero kappa together with l charges.
kappa is either an exact rational r/e in lowest terms (then e is the
denominator driving all modular arithmetic) or a symbolic irrational
(e = infinity).  Charges are pairs (a, b) standing for a + b/kappa, kept
split so membership tests against the lattices Z, (1/kappa)Z and
Z + (1/kappa)Z stay exact in the symbolic case.

Derived scalars:
  h_i  = kappa*s_i - i/l
  c_b  = kappa*l*(x - y) + l*h_i = kappa*l*cont(b) - i   (cont charged)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import InvalidInputError, UnsupportedParameterError
from .partitions import Box

RationalLike = Union[int, str, Fraction]


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, slots=True)
class KappaValue:
    """Nonzero rational (value set) or symbolic irrational (value None)."""

    value: Optional[Fraction]

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, "value", _frac(self.value))
            if self.value == 0:
                raise InvalidInputError("kappa must be nonzero")

    @property
    def is_rational(self) -> bool:
        return self.value is not None

    @property
    def e(self) -> Optional[int]:
        """Denominator of kappa in lowest terms; None stands for infinity."""
        return self.value.denominator if self.value is not None else None

    @property
    def r_abs(self) -> Optional[int]:
        return abs(self.value.numerator) if self.value is not None else None

    def __repr__(self) -> str:
        return f"KappaValue({self.value})" if self.is_rational else "KappaValue(~)"


def rational_kappa(num: RationalLike, den: int = 1) -> KappaValue:
    return KappaValue(Fraction(_frac(num), den))


IRRATIONAL = KappaValue(None)


@dataclass(frozen=True, slots=True)
class ChargeValue:
    """The value a + b/kappa with exact rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    def __add__(self, other: "ChargeValue") -> "ChargeValue":
        return ChargeValue(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "ChargeValue") -> "ChargeValue":
        return ChargeValue(self.a - other.a, self.b - other.b)

    def shift(self, t: RationalLike) -> "ChargeValue":
        return ChargeValue(self.a + _frac(t), self.b)

    def collapse(self, kappa: KappaValue) -> Fraction:
        if not kappa.is_rational:
            raise UnsupportedParameterError("cannot collapse a charge at symbolic kappa")
        return self.a + self.b / kappa.value

    def __repr__(self) -> str:
        if self.b == 0:
            return f"ChargeValue({self.a})"
        return f"ChargeValue({self.a}, {self.b})"


def charge(a: RationalLike, b: RationalLike = 0) -> ChargeValue:
    return ChargeValue(_frac(a), _frac(b))


@dataclass(frozen=True, slots=True)
class CValue:
    """The value u*kappa + v with exact rational u, v."""

    u: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", _frac(self.u))
        object.__setattr__(self, "v", _frac(self.v))

    def __add__(self, other: "CValue") -> "CValue":
        return CValue(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "CValue") -> "CValue":
        return CValue(self.u - other.u, self.v - other.v)

    def collapse(self, kappa: KappaValue) -> Fraction:
        if not kappa.is_rational:
            raise UnsupportedParameterError("cannot collapse a c-value at symbolic kappa")
        return self.u * kappa.value + self.v


C_ZERO = CValue(Fraction(0), Fraction(0))


def cvalue_integer_difference(
    c1: CValue, c2: CValue, kappa: KappaValue
) -> Optional[int]:
    """c1 - c2 when it is an exact integer, else None."""
    d = c1 - c2
    if kappa.is_rational:
        val = d.collapse(kappa)
        return int(val) if val.denominator == 1 else None
    if d.u != 0 or d.v.denominator != 1:
        return None
    return int(d.v)


def c_sort_key(c: CValue, kappa: KappaValue):
    """Total order on c-values: numeric for rational kappa, and
    lexicographic in (u, v) otherwise (kappa is transcendental-generic,
    so equality of pairs is the only equality)."""
    if kappa.is_rational:
        return c.collapse(kappa)
    return (c.u, c.v)


@dataclass(frozen=True, slots=True)
class Residue:
    """Label of a box-equivalence class: the component class and the
    normalized content, an integer mod e (plain integer when e = inf)."""

    class_id: int
    value: int

    def __str__(self) -> str:
        return f"{self.class_id}:{self.value}"


@dataclass(frozen=True, slots=True)
class KappaDenominatorWall:
    d: int


@dataclass(frozen=True, slots=True)
class ChargeDifferenceWall:
    i: int
    j: int
    m: int


WallDescriptor = Union[KappaDenominatorWall, ChargeDifferenceWall]


@dataclass(frozen=True, slots=True)
class HeckeExponents:
    """Multiplicative Hecke parameters as exponents: parameter =
    exp(2*pi*sqrt(-1)*t) with each t reduced mod 1."""

    q_exp: Fraction
    Q_exp: tuple[Fraction, ...]


@dataclass(frozen=True, slots=True)
class CherednikParams:
    level: int
    kappa: KappaValue
    s: tuple[ChargeValue, ...]

    def __post_init__(self):
        if self.level < 1:
            raise InvalidInputError("level must be at least 1")
        s = tuple(
            c if isinstance(c, ChargeValue) else charge(c) for c in self.s
        )
        if len(s) != self.level:
            raise InvalidInputError(
                f"expected {self.level} charges, got {len(s)}"
            )
        object.__setattr__(self, "s", s)

    @property
    def e(self) -> Optional[int]:
        return self.kappa.e

    def h(self, i: int) -> CValue:
        """h_i = kappa*s_i - i/l as a CValue (exact in both kappa modes)."""
        si = self.s[i]
        return CValue(si.a, si.b - Fraction(i, self.level))

    def charged_content(self, b: Box) -> ChargeValue:
        if not 0 <= b.comp < self.level:
            raise InvalidInputError(f"component {b.comp} out of range")
        return self.s[b.comp].shift(b.x - b.y)

    def c_of_box(self, b: Box) -> CValue:
        """c_b = kappa*l*cont(b) - comp, as u*kappa + v."""
        cont = self.charged_content(b)
        return CValue(self.level * cont.a, self.level * cont.b - b.comp)

    def box_equivalent(self, b1: Box, b2: Box) -> bool:
        d = self.charged_content(b1) - self.charged_content(b2)
        if self.kappa.is_rational:
            scaled = self.kappa.value * (d.a + d.b / self.kappa.value)
            return scaled.denominator == 1
        return d.a == 0 and d.b.denominator == 1

    def component_classes(self) -> tuple[tuple[int, ...], ...]:
        return _component_classes(self)

    def class_of_component(self, i: int) -> int:
        for cid, members in enumerate(self.component_classes()):
            if i in members:
                return cid
        raise InvalidInputError(f"component {i} out of range")

    def residue(self, b: Box) -> Residue:
        cid = self.class_of_component(b.comp)
        rep = self.component_classes()[cid][0]
        cont = self.charged_content(b)
        if self.kappa.is_rational:
            r = self.kappa.r_abs
            e = self.kappa.e
            sigma = self.s[rep].collapse(self.kappa)
            offset = sigma - Fraction(math.floor(sigma * r), r)
            scaled = (cont.collapse(self.kappa) - offset) * r
            if scaled.denominator != 1:
                raise InvalidInputError(
                    f"box {b} does not lie on the class-{cid} content lattice"
                )
            return Residue(cid, int(scaled) * pow(r, -1, e) % e if e > 1 else 0)
        offset = self.s[rep].a - math.floor(self.s[rep].a)
        value = cont.a - offset
        if value.denominator != 1:
            raise InvalidInputError(
                f"box {b} does not lie on the class-{cid} content lattice"
            )
        return Residue(cid, int(value))

    def __repr__(self) -> str:
        return f"CherednikParams(l={self.level}, kappa={self.kappa}, s={list(self.s)})"


def make_params(level: int, kappa, s) -> CherednikParams:
    """Convenience constructor: kappa may be a KappaValue, Fraction-like,
    or None for the symbolic irrational; charges may be Fraction-likes or
    (a, b) pairs."""
    if not isinstance(kappa, KappaValue):
        kappa = KappaValue(None if kappa is None else _frac(kappa))
    out = []
    for c in s:
        if isinstance(c, ChargeValue):
            out.append(c)
        elif isinstance(c, (tuple, list)):
            out.append(charge(*c))
        else:
            out.append(charge(c))
    return CherednikParams(level, kappa, tuple(out))


def _in_kappa_inv_lattice(d: ChargeValue, kappa: KappaValue) -> bool:
    """d in (1/kappa)Z."""
    if kappa.is_rational:
        scaled = kappa.value * d.collapse(kappa)
        return scaled.denominator == 1
    return d.a == 0 and d.b.denominator == 1


def _in_mixed_lattice(d: ChargeValue, kappa: KappaValue) -> bool:
    """d in Z + (1/kappa)Z."""
    if kappa.is_rational:
        # Z + (e/r)Z = (1/r)Z when gcd(e, r) = 1
        return (d.collapse(kappa) * kappa.r_abs).denominator == 1
    return d.a.denominator == 1 and d.b.denominator == 1


@lru_cache(maxsize=None)
def _component_classes(params: CherednikParams) -> tuple[tuple[int, ...], ...]:
    classes: list[list[int]] = []
    for i in range(params.level):
        for members in classes:
            if _in_mixed_lattice(params.s[i] - params.s[members[0]], params.kappa):
                members.append(i)
                break
        else:
            classes.append([i])
    classes.sort(key=lambda ms: ms[0])
    return tuple(tuple(ms) for ms in classes)


def equivalence_classes(params: CherednikParams) -> tuple[tuple[int, ...], ...]:
    """The partition of {0..l-1} by s_i - s_j in Z + (1/kappa)Z, ordered
    by least member."""
    return params.component_classes()


def is_essential_charge_wall(
    params: CherednikParams, i: int, j: int, m: int
) -> bool:
    """Whether s_i - s_j = m defines an essential wall, i.e. the parameter
    point can reach the wall inside its own (1/kappa)Z charge lattice."""
    d = (params.s[i] - params.s[j]).shift(-m)
    return _in_kappa_inv_lattice(d, params.kappa)


def essential_walls(params: CherednikParams, n: int) -> list[WallDescriptor]:
    """Parameter hyperplanes relevant for rank n: the kappa-denominator
    wall when 2 <= e <= n, and each charge wall s_i - s_j = m with i < j,
    |m| < n, whose defining difference lies in (1/kappa)Z."""
    if n < 1:
        raise InvalidInputError("rank n must be at least 1")
    walls: list[WallDescriptor] = []
    if params.kappa.is_rational and 2 <= params.kappa.e <= n:
        walls.append(KappaDenominatorWall(params.kappa.e))
    for i in range(params.level):
        for j in range(i + 1, params.level):
            for m in range(-(n - 1), n):
                if is_essential_charge_wall(params, i, j, m):
                    walls.append(ChargeDifferenceWall(i, j, m))
    return walls


def hecke_exponents(params: CherednikParams) -> HeckeExponents:
    """q = exp(2*pi*i*kappa) and Q_i = exp(2*pi*i*(h_i + i/l)) as exact
    exponents mod 1.  Needs rational kappa."""
    if not params.kappa.is_rational:
        raise UnsupportedParameterError("Hecke exponents need rational kappa")
    kv = params.kappa.value
    q_exp = kv - math.floor(kv)
    Q = []
    for i in range(params.level):
        t = kv * params.s[i].collapse(params.kappa)
        Q.append(t - math.floor(t))
    return HeckeExponents(q_exp, tuple(Q))


def rank_one_verma_hom(
    level: int, h: Sequence[RationalLike], k: int, j: int
) -> tuple[int, Optional[int]]:
    """Dimension of the Hom space between rank-one standard modules with
    lowest h-weights h_k, h_j, together with the witness degree.

    A nonzero map exists exactly when n := l*(h_j - h_k) is a nonnegative
    integer congruent to j - k mod l (the degree-n coefficient
    n + l*h_{j-n} - l*h_j vanishes precisely then).
    """
    if not 0 <= k < level or not 0 <= j < level:
        raise InvalidInputError("component indices out of range")
    hs = [_frac(x) for x in h]
    if len(hs) != level:
        raise InvalidInputError(f"expected {level} h-values")
    n = level * (hs[j] - hs[k])
    if n.denominator != 1 or n < 0 or (int(n) - (j - k)) % level != 0:
        return (0, None)
    return (1, int(n))


def normalize_for_support(
    params: CherednikParams,
) -> tuple[CherednikParams, bool]:
    """Reduce to kappa < 0 for support computations: positive rational
    kappa maps to (-kappa, -s) with a transpose flag for the labels.
    Symbolic kappa carries no sign and is returned unchanged."""
    if not params.kappa.is_rational or params.kappa.value < 0:
        return params, False
    flipped = CherednikParams(
        params.level,
        KappaValue(-params.kappa.value),
        tuple(ChargeValue(-c.a, -c.b) for c in params.s),
    )
    return flipped, True
