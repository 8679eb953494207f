"""Level-l Fock space with exact rational coefficients.

A Fock vector is a finite linear combination of multipartitions of a
fixed level, truncated at a degree bound: producing a term above the
bound raises TruncationOverflowError rather than silently dropping it.
On this space we realize:

  * f_z_op / e_z_op: sum of additions (removals) of a single box of a
            given residue, no signs;
  * b_plus_op / b_minus_op: degree-d Heisenberg operators, adding or
            removing d*e-ribbons componentwise with sign (-1)^height,
            available both directly ("ribbon") and through the abacus
            bead model ("wedge");
  * plethysm_class: the class of the plethysm s_mu[p_e] expanded over
            partitions, via Murnaghan-Nakayama characters;
  * singular_subspace / filtration_dim: the joint kernel of all
            lowering operators in a fixed degree, and dimensions of the
            two-parameter filtration it generates under raising
            operators and Heisenberg monomials;
  * embed_to_charged and the wedge operators wedge_f_op / wedge_e_op on
            charged words, the strictly-decreasing integer tuples that
            realize multipartitions once each component is padded to a
            fixed positive charge.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple, Optional, Sequence, Union

from .errors import (
    InvalidInputError,
    TruncationOverflowError,
    UnsupportedParameterError,
)
from .linalg import RowSpan, kernel_basis
from .params import CherednikParams, Residue, make_params
from .partitions import (
    Multipartition,
    Partition,
    enumerate_multipartitions,
    enumerate_partitions,
    ribbon_additions,
    ribbon_removals,
)

Scalar = Union[int, Fraction]


class FockVector:
    """Finite rational combination of multipartitions of one level.

    Entries of degree above ``truncation`` are rejected loudly; zero
    coefficients are dropped on construction.
    """

    __slots__ = ("level", "truncation", "entries")

    def __init__(
        self,
        level: int,
        truncation: int,
        entries: Optional[dict[Multipartition, Scalar]] = None,
    ):
        if level < 1:
            raise InvalidInputError(f"level must be >= 1, got {level}")
        if truncation < 0:
            raise InvalidInputError(f"truncation must be >= 0, got {truncation}")
        self.level = level
        self.truncation = truncation
        clean: dict[Multipartition, Fraction] = {}
        for lam, coeff in (entries or {}).items():
            if lam.level != level:
                raise InvalidInputError(
                    f"term {lam} has level {lam.level}, expected {level}"
                )
            if lam.size > truncation:
                raise TruncationOverflowError(
                    f"term of degree {lam.size} exceeds truncation {truncation}"
                )
            c = Fraction(coeff)
            if c != 0:
                clean[lam] = c
        self.entries = clean

    def coeff(self, lam: Multipartition) -> Fraction:
        return self.entries.get(lam, Fraction(0))

    def items(self) -> list[tuple[Multipartition, Fraction]]:
        """Terms sorted by degree then the canonical multipartition order."""
        return sorted(
            self.entries.items(), key=lambda kv: (kv[0].size, kv[0].sort_key())
        )

    def is_zero(self) -> bool:
        return not self.entries

    def degrees(self) -> list[int]:
        return sorted({lam.size for lam in self.entries})

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.level != other.level:
            raise InvalidInputError("cannot add vectors of different levels")
        merged = dict(self.entries)
        for lam, c in other.entries.items():
            merged[lam] = merged.get(lam, Fraction(0)) + c
        return FockVector(
            self.level, max(self.truncation, other.truncation), merged
        )

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, r: Scalar) -> "FockVector":
        f = Fraction(r)
        return FockVector(
            self.level,
            self.truncation,
            {lam: c * f for lam, c in self.entries.items()},
        )

    def __mul__(self, r: Scalar) -> "FockVector":
        return self.scale(r)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.level == other.level and self.entries == other.entries

    def __hash__(self):
        return hash((self.level, frozenset(self.entries.items())))

    def __repr__(self):
        if self.is_zero():
            return "FockVector(0)"
        terms = " + ".join(f"({c})*|{lam}>" for lam, c in self.items())
        return f"FockVector({terms})"


def basis_vector(lam: Multipartition, truncation: int) -> FockVector:
    return FockVector(lam.level, truncation, {lam: Fraction(1)})


def inner_product(u: FockVector, v: FockVector) -> Fraction:
    """Standard bilinear form with the multipartition basis orthonormal."""
    if u.level != v.level:
        raise InvalidInputError("inner product needs equal levels")
    small, big = (u, v) if len(u.entries) <= len(v.entries) else (v, u)
    return sum(
        (c * big.entries[lam] for lam, c in small.entries.items() if lam in big.entries),
        Fraction(0),
    )


TermMap = Callable[[Multipartition], Iterable[tuple[Multipartition, int]]]


def _apply_termwise(v: FockVector, term_map: TermMap) -> FockVector:
    out: dict[Multipartition, Fraction] = {}
    for lam, c in v.entries.items():
        for mu, w in term_map(lam):
            out[mu] = out.get(mu, Fraction(0)) + c * w
    return FockVector(v.level, v.truncation, out)


def f_z_op(v: FockVector, z: Residue, params: CherednikParams) -> FockVector:
    """Sum of all single-box additions of residue z, coefficient 1."""
    _check_vector_params(v, params)

    def term_map(lam: Multipartition):
        return [
            (lam.add_box(b), 1)
            for b in lam.addable_boxes()
            if params.residue(b) == z
        ]

    return _apply_termwise(v, term_map)


def e_z_op(v: FockVector, z: Residue, params: CherednikParams) -> FockVector:
    """Sum of all single-box removals of residue z, coefficient 1."""
    _check_vector_params(v, params)

    def term_map(lam: Multipartition):
        return [
            (lam.remove_box(b), 1)
            for b in lam.removable_boxes()
            if params.residue(b) == z
        ]

    return _apply_termwise(v, term_map)


def _check_vector_params(v: FockVector, params: CherednikParams) -> None:
    if v.level != params.level:
        raise InvalidInputError(
            f"vector level {v.level} does not match parameter level {params.level}"
        )


def _require_finite_e(params: CherednikParams) -> int:
    e = params.kappa.e
    if e is None:
        raise UnsupportedParameterError(
            "Heisenberg operators need rational kappa (finite quantization e)"
        )
    if e < 2:
        raise UnsupportedParameterError(
            "integer kappa (e = 1) is outside the supported parameter range"
        )
    return e


def _ribbon_term_map(length: int, remove: bool) -> TermMap:
    moves = ribbon_removals if remove else ribbon_additions

    def term_map(lam: Multipartition):
        out = []
        for i, comp in enumerate(lam.components):
            for mv in moves(comp, length):
                out.append((lam.replace_component(i, mv.result), mv.sign))
        return out

    return term_map


def _wedge_moves(p: Partition, step: int) -> list[tuple[Partition, int]]:
    """All bead moves by `step` on the abacus of p, with crossing signs.

    Beads sit at beta_k = p_k - k + W for k = 1..W; the window size
    W = len(p) + |step| is large enough that every legal move, including
    promotions out of the untouched tail, has both endpoints visible.
    """
    window = len(p.parts) + abs(step)
    betas = [p.row(k) - k + window for k in range(1, window + 1)]
    occupied = set(betas)
    out = []
    for b in betas:
        target = b + step
        if target < 0 or target in occupied:
            continue
        lo, hi = min(b, target), max(b, target)
        crossings = sum(1 for x in betas if lo < x < hi)
        newbetas = sorted((x for x in betas if x != b), reverse=True)
        newbetas.append(target)
        newbetas.sort(reverse=True)
        parts = [x - window + k for k, x in enumerate(newbetas, start=1)]
        out.append((Partition(parts), -1 if crossings % 2 else 1))
    return out


def _wedge_term_map(length: int, remove: bool) -> TermMap:
    step = -length if remove else length

    def term_map(lam: Multipartition):
        out = []
        for i, comp in enumerate(lam.components):
            for result, sign in _wedge_moves(comp, step):
                out.append((lam.replace_component(i, result), sign))
        return out

    return term_map


def b_plus_op(
    v: FockVector, d: int, params: CherednikParams, model: str = "ribbon"
) -> FockVector:
    """Degree-d raising Heisenberg operator: add one d*e-ribbon to a
    single component, sign (-1)^(ribbon height)."""
    return _heisenberg(v, d, params, model, remove=False)


def b_minus_op(
    v: FockVector, d: int, params: CherednikParams, model: str = "ribbon"
) -> FockVector:
    """Degree-d lowering Heisenberg operator, adjoint to b_plus_op."""
    return _heisenberg(v, d, params, model, remove=True)


def _heisenberg(
    v: FockVector, d: int, params: CherednikParams, model: str, remove: bool
) -> FockVector:
    _check_vector_params(v, params)
    e = _require_finite_e(params)
    if d < 1:
        raise InvalidInputError(f"Heisenberg degree must be >= 1, got {d}")
    if model == "ribbon":
        term_map = _ribbon_term_map(d * e, remove)
    elif model == "wedge":
        term_map = _wedge_term_map(d * e, remove)
    else:
        raise InvalidInputError(f"unknown Heisenberg model {model!r}")
    return _apply_termwise(v, term_map)


@lru_cache(maxsize=None)
def _mn_character(mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Symmetric group character chi^mu(rho) by Murnaghan-Nakayama."""
    if not rho:
        return 1 if not mu else 0
    total = 0
    for mv in ribbon_removals(Partition(mu), rho[0]):
        total += mv.sign * _mn_character(mv.result.parts, rho[1:])
    return total


def _z_rho(rho: Partition) -> int:
    z = 1
    mult: dict[int, int] = {}
    for part in rho.parts:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        fact = 1
        for k in range(2, m + 1):
            fact *= k
        z *= part**m * fact
    return z


def plethysm_class(mu, e: int) -> FockVector:
    """Class of s_mu[p_e] in the level-1 Fock space, truncation e*|mu|.

    Expands s_mu = sum_rho chi^mu(rho)/z_rho * p_rho and substitutes
    p_d -> B_d acting on the vacuum, so the result is the alternating
    sum of e*|mu|-sized terms whose coefficients are the e-ribbon
    tableau signs.
    """
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if e < 2:
        raise UnsupportedParameterError(
            f"plethysm classes need quantization e >= 2, got {e}"
        )
    n = mu.size
    truncation = e * n
    params = make_params(1, Fraction(-1, e), [0])
    vacuum = Multipartition([[]])
    acc = FockVector(1, truncation)
    for rho in enumerate_partitions(n):
        chi = _mn_character(mu.parts, rho.parts)
        if chi == 0:
            continue
        vec = basis_vector(vacuum, truncation)
        for part in rho.parts:
            vec = b_plus_op(vec, part, params, model="ribbon")
        acc = acc + vec.scale(Fraction(chi, _z_rho(rho)))
    return acc


def _basis_at_degree(level: int, degree: int) -> list[Multipartition]:
    return enumerate_multipartitions(level, degree)


def _vector_coords(v: FockVector, basis_index: dict[Multipartition, int], ncols: int):
    coords = [Fraction(0)] * ncols
    for lam, c in v.entries.items():
        coords[basis_index[lam]] = c
    return coords


def singular_subspace(
    level: int, n: int, params: CherednikParams
) -> list[FockVector]:
    """Basis of the degree-n joint kernel of every lowering operator:
    all e_z for residues z present on degree-n multipartitions, and all
    Heisenberg b_minus_op of degree d with d*e <= n when kappa is
    rational.  Returned vectors have truncation n."""
    if params.level != level:
        raise InvalidInputError(
            f"level argument {level} does not match parameter level {params.level}"
        )
    if n < 0:
        raise InvalidInputError(f"degree must be >= 0, got {n}")
    return list(_singular_subspace_cached(level, n, params))


@lru_cache(maxsize=None)
def _singular_subspace_cached(
    level: int, n: int, params: CherednikParams
) -> tuple[FockVector, ...]:
    basis = _basis_at_degree(level, n)
    index = {lam: i for i, lam in enumerate(basis)}
    ncols = len(basis)

    residues = sorted(
        {
            params.residue(b)
            for lam in basis
            for b in lam.removable_boxes()
        },
        key=lambda z: (z.class_id, z.value),
    )
    lowerings: list[Callable[[FockVector], FockVector]] = [
        (lambda v, zz=z: e_z_op(v, zz, params)) for z in residues
    ]
    e = params.kappa.e
    if e is not None and e >= 2:
        for d in range(1, n // e + 1):
            lowerings.append(lambda v, dd=d: b_minus_op(v, dd, params))

    rows: list[list[Fraction]] = []
    for op in lowerings:
        images = [op(basis_vector(lam, n)) for lam in basis]
        targets = sorted(
            {mu for img in images for mu in img.entries},
            key=lambda m: (m.size, m.sort_key()),
        )
        for mu in targets:
            rows.append([img.coeff(mu) for img in images])

    kernel = kernel_basis(rows, ncols)
    out = []
    for vec in kernel:
        out.append(
            FockVector(
                level,
                n,
                {basis[i]: c for i, c in enumerate(vec) if c != 0},
            )
        )
    return tuple(out)


def _heisenberg_monomials(q: int, e: Optional[int]) -> list[Partition]:
    """Partitions d_1 >= d_2 >= ... with total degree sum(d_k) <= q,
    indexing the Heisenberg monomials B_{d_1}...B_{d_k}.  Without a
    finite quantization only the empty monomial exists."""
    if e is None:
        return [Partition([])]
    out = []
    for total in range(q + 1):
        out.extend(enumerate_partitions(total))
    return out


def filtration_dim(
    p: int, q: int, n: int, level: int, params: CherednikParams
) -> int:
    """Dimension of the degree-n slice of the filtration space built
    from singular vectors by at most q units of Heisenberg raising and
    at most p single-box raisings."""
    if params.level != level:
        raise InvalidInputError(
            f"level argument {level} does not match parameter level {params.level}"
        )
    if p < 0 or q < 0 or n < 0:
        raise InvalidInputError("filtration indices must be >= 0")
    e = params.kappa.e
    if e is not None and e < 2:
        raise UnsupportedParameterError(
            "integer kappa (e = 1) is outside the supported parameter range"
        )

    bases = {g: _basis_at_degree(level, g) for g in range(n + 1)}
    indexes = {
        g: {lam: i for i, lam in enumerate(basis)} for g, basis in bases.items()
    }
    spans = {g: RowSpan(len(bases[g])) for g in range(n + 1)}

    def insert(v: FockVector) -> bool:
        if v.is_zero():
            return False
        degs = v.degrees()
        if len(degs) != 1:
            raise InvalidInputError("filtration vectors must be homogeneous")
        g = degs[0]
        return spans[g].insert(_vector_coords(v, indexes[g], len(bases[g])))

    layer: list[FockVector] = []
    for g in range(n + 1):
        for sing in singular_subspace(level, g, params):
            sing = FockVector(level, n, sing.entries)
            for mono in _heisenberg_monomials(q, e):
                if g + (e or 0) * mono.size > n:
                    continue
                vec = sing
                for d in mono.parts:
                    vec = b_plus_op(vec, d, params)
                if insert(vec):
                    layer.append(vec)

    for _ in range(p):
        next_layer: list[FockVector] = []
        for vec in layer:
            if max(vec.degrees(), default=n) >= n:
                continue
            residues = sorted(
                {
                    params.residue(b)
                    for lam in vec.entries
                    for b in lam.addable_boxes()
                },
                key=lambda z: (z.class_id, z.value),
            )
            for z in residues:
                image = f_z_op(vec, z, params)
                if insert(image):
                    next_layer.append(image)
        if not next_layer:
            break
        layer = next_layer

    return spans[n].dim


class ChargedWord(NamedTuple):
    """One strictly decreasing integer run per component; the run for a
    component of charge s lists the s charged beta numbers."""

    runs: tuple[tuple[int, ...], ...]

    def __str__(self):
        return "|".join(",".join(str(a) for a in run) for run in self.runs)


def _validate_word(runs: Sequence[Sequence[int]]) -> ChargedWord:
    packed = []
    for run in runs:
        t = tuple(int(a) for a in run)
        if any(t[k] <= t[k + 1] for k in range(len(t) - 1)):
            raise InvalidInputError(f"run {t} is not strictly decreasing")
        packed.append(t)
    return ChargedWord(tuple(packed))


def embed_to_charged(lam: Multipartition, charges: Sequence[int]) -> ChargedWord:
    """Charged word of lam: component i of charge s_i becomes the run
    (s_i + lam_k - k + 1) for k = 1..s_i, entries strictly decreasing
    and >= 1.  Each entry equals the charged content of the box that a
    raising move at that row would add."""
    if len(charges) != lam.level:
        raise InvalidInputError(
            f"expected {lam.level} charges, got {len(charges)}"
        )
    runs = []
    for i, comp in enumerate(lam.components):
        s = int(charges[i])
        if s < 1:
            raise InvalidInputError(f"charge {s} for component {i} must be >= 1")
        if len(comp.parts) > s:
            raise InvalidInputError(
                f"charge {s} too small for component {i} of length {len(comp.parts)}"
            )
        runs.append(tuple(s + comp.row(k) - k + 1 for k in range(1, s + 1)))
    return ChargedWord(tuple(runs))


def charged_to_multipartition(word: ChargedWord) -> Multipartition:
    """Inverse of embed_to_charged where defined; entries must give
    weakly decreasing nonnegative rows."""
    comps = []
    for run in word.runs:
        s = len(run)
        parts = [run[k - 1] - s + k - 1 for k in range(1, s + 1)]
        if any(x < 0 for x in parts):
            raise InvalidInputError(f"run {run} has no partition preimage")
        comps.append(parts)
    return Multipartition(comps)


def wedge_f_op(word: ChargedWord, i: int, e: int) -> dict[ChargedWord, Fraction]:
    """Raising operator on charged words: each entry a with a = i mod e
    moves to a+1, coefficient +1; moves blocked by an occupied slot are
    dropped.  Runs are independent of one another."""
    return _wedge_word_op(word, i, e, raise_=True)


def wedge_e_op(word: ChargedWord, i: int, e: int) -> dict[ChargedWord, Fraction]:
    """Lowering operator on charged words: each entry a with a-1 = i
    mod e moves to a-1 when that slot is free and stays positive.
    Entries never drop below 1, matching the positive-index wedge
    space that charged words of partitions span."""
    return _wedge_word_op(word, i, e, raise_=False)


def _wedge_word_op(
    word: ChargedWord, i: int, e: int, raise_: bool
) -> dict[ChargedWord, Fraction]:
    if e < 2:
        raise UnsupportedParameterError(f"wedge operators need e >= 2, got {e}")
    word = _validate_word(word.runs)
    out: dict[ChargedWord, Fraction] = {}
    for ri, run in enumerate(word.runs):
        entries = set(run)
        for k, a in enumerate(run):
            if raise_:
                if (a - i) % e != 0:
                    continue
                target = a + 1
            else:
                if (a - 1 - i) % e != 0:
                    continue
                target = a - 1
                if target < 1:
                    continue
            if target in entries:
                continue
            newrun = sorted((x for x in run if x != a), reverse=True)
            newrun.append(target)
            newrun.sort(reverse=True)
            newruns = list(word.runs)
            newruns[ri] = tuple(newrun)
            neww = ChargedWord(tuple(newruns))
            out[neww] = out.get(neww, Fraction(0)) + 1
    return {w: c for w, c in out.items() if c != 0}


def operator_matrix(
    apply_op: Callable[[FockVector], FockVector],
    level: int,
    degree_from: int,
    degree_to: int,
) -> tuple[list[Multipartition], list[Multipartition], dict[tuple[int, int], Fraction]]:
    """Matrix of a linear operator between graded pieces: returns the
    row basis (degree_to), column basis (degree_from), and the sparse
    entry dict keyed by (row, column)."""
    cols = _basis_at_degree(level, degree_from)
    rows = _basis_at_degree(level, degree_to)
    row_index = {lam: i for i, lam in enumerate(rows)}
    truncation = max(degree_from, degree_to)
    entries: dict[tuple[int, int], Fraction] = {}
    for j, lam in enumerate(cols):
        image = apply_op(basis_vector(lam, truncation))
        for mu, c in image.entries.items():
            if mu.size != degree_to:
                raise InvalidInputError(
                    f"operator image leaves degree {degree_to}: got degree {mu.size}"
                )
            entries[(row_index[mu], j)] = c
    return rows, cols, entries
