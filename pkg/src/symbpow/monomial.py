"""Monomials and monomial ideals with exact, arbitrary-precision exponents.

The ambient ring is k[x_0, ..., x_n] for ambient_dim = n + 1; a monomial is
identified with its exponent vector.  A MonomialIdeal stores the unique
minimal (divisibility-reduced) generating set, sorted by total degree and
then lexicographically, so equal ideals are structurally equal.  The empty
generating set is the zero ideal; the single degree-0 generator is the unit
ideal.

Hot kernels (minimalization, pairwise lcm/product, divisibility scans) run
on int64 numpy arrays whenever every exponent sits below 2**31, which makes
componentwise max and pairwise sums overflow-free; anything larger falls
back to pure Python big integers, so results are exact for any magnitude.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError

_NP_SAFE = 1 << 31
_NP_MIN_WORK = 48  # below this many vectors the python path wins
_BATCH = 512


@dataclass(frozen=True)
class Monomial:
    """An exponent vector.  The all-zero vector is the monomial 1."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @cached_property
    def degree(self) -> int:
        return sum(self.exponents)

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self):
        return (self.degree, self.exponents)

    def render(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i}" for i in range(len(self.exponents))]
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.render()


def support(m: Monomial) -> tuple[int, ...]:
    return m.support


def divides(a: Monomial, b: Monomial) -> bool:
    if len(a.exponents) != len(b.exponents):
        raise DimensionMismatchError("monomials live in different rings")
    return a.divides(b)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, held by its minimal generating set.

    Instances are only built through `make` / `zero` / `unit` /
    `_from_vectors`, which establish the canonical form (deduplicated,
    divisibility-minimal, sorted).  gens == () encodes the zero ideal and
    gens == (1,) the unit ideal; `is_zero` / `is_unit` are the flags.
    """

    ambient_dim: int
    gens: tuple[Monomial, ...]

    @staticmethod
    def make(ambient_dim: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        gens = list(gens)
        if ambient_dim < 1:
            raise ValueError("ambient_dim must be at least 1")
        for g in gens:
            if len(g.exponents) != ambient_dim:
                raise DimensionMismatchError(
                    f"generator {g} has {len(g.exponents)} exponents, expected {ambient_dim}")
        return MonomialIdeal(ambient_dim, tuple(minimalize(gens)))

    @staticmethod
    def zero(ambient_dim: int) -> "MonomialIdeal":
        return MonomialIdeal(ambient_dim, ())

    @staticmethod
    def unit(ambient_dim: int) -> "MonomialIdeal":
        return MonomialIdeal(ambient_dim, (Monomial((0,) * ambient_dim),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @cached_property
    def vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exponents for g in self.gens)

    @cached_property
    def simplex_power(self) -> tuple[tuple[int, ...], int] | None:
        """Detects ideals of the form P^m for a monomial prime P.

        Those are exactly the ideals generated by *all* monomials of one
        degree m >= 1 in some variable subset S: equal degrees, support
        union S, and the full count C(m+|S|-1, |S|-1) of generators.
        Returns (sorted S, m), or None.
        """
        if self.is_zero or self.is_unit:
            return None
        m = self.gens[0].degree
        if m < 1 or any(g.degree != m for g in self.gens):
            return None
        s_vars = sorted({i for g in self.gens for i in g.support})
        if len(self.gens) != comb(m + len(s_vars) - 1, len(s_vars) - 1):
            return None
        return tuple(s_vars), m

    def render(self, names: Sequence[str] | None = None) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(g.render(names) for g in self.gens) + ")"

    def __str__(self):
        return self.render()


def _check_same_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.ambient_dim != J.ambient_dim:
        raise DimensionMismatchError("ideals live in different rings")


# ---------------------------------------------------------------------------
# vector kernels


def _np_usable(vectors) -> bool:
    return all(e < _NP_SAFE for v in vectors for e in v)


def _minimal_vectors_py(uniq: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    kept: list[tuple[int, ...]] = []
    for v in uniq:  # uniq sorted by (degree, lex); divisors come no later
        if not any(all(k[i] <= v[i] for i in range(len(v))) for k in kept):
            kept.append(v)
    return kept


def _minimal_vectors_np(uniq: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    arr = np.array(uniq, dtype=np.int64)
    degs = arr.sum(axis=1)
    kept: np.ndarray | None = None
    i, n = 0, len(uniq)
    while i < n:
        j = i
        d = degs[i]
        while j < n and degs[j] == d:
            j += 1
        # same-degree distinct vectors never divide one another
        for lo in range(i, j, _BATCH):
            batch = arr[lo:min(lo + _BATCH, j)]
            if kept is None:
                fresh = batch
            else:
                dominated = (kept[None, :, :] <= batch[:, None, :]).all(axis=2).any(axis=1)
                fresh = batch[~dominated]
            if len(fresh):
                kept = fresh if kept is None else np.concatenate([kept, fresh])
        i = j
    if kept is None:
        return []
    return [tuple(int(e) for e in row) for row in kept]


def minimal_vectors(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Divisibility-minimal subset, sorted by (total degree, lex)."""
    uniq = sorted(set(vectors), key=lambda v: (sum(v), v))
    if len(uniq) < _NP_MIN_WORK or not _np_usable(uniq):
        return _minimal_vectors_py(uniq)
    return _minimal_vectors_np(uniq)


def _any_divisor_mask(targets: list[tuple[int, ...]], divisors: list[tuple[int, ...]],
                      min_gap: int = 0) -> list[bool]:
    """For each target, is there a divisor with degree gap >= min_gap?"""
    if not divisors:
        return [False] * len(targets)
    if not targets:
        return []
    if (len(targets) * len(divisors) < 4096
            or not _np_usable(targets) or not _np_usable(divisors)):
        ddeg = [sum(d) for d in divisors]
        out = []
        for t in targets:
            tdeg = sum(t)
            out.append(any(
                tdeg - ddeg[k] >= min_gap and all(d[i] <= t[i] for i in range(len(t)))
                for k, d in enumerate(divisors)))
        return out
    tarr = np.array(targets, dtype=np.int64)
    darr = np.array(divisors, dtype=np.int64)
    tdeg = tarr.sum(axis=1)
    ddeg = darr.sum(axis=1)
    out: list[bool] = []
    for lo in range(0, len(targets), _BATCH):
        tb = tarr[lo:lo + _BATCH]
        div = (darr[None, :, :] <= tb[:, None, :]).all(axis=2)
        gap = (tdeg[lo:lo + _BATCH, None] - ddeg[None, :]) >= min_gap
        out.extend(bool(x) for x in (div & gap).any(axis=1))
    return out


def _pairwise_combine(avecs, bvecs, op) -> list[tuple[int, ...]]:
    if (len(avecs) * len(bvecs) < 4096
            or not _np_usable(avecs) or not _np_usable(bvecs)):
        if op == "lcm":
            return [tuple(map(max, a, b)) for a in avecs for b in bvecs]
        return [tuple(x + y for x, y in zip(a, b)) for a in avecs for b in bvecs]
    aarr = np.array(avecs, dtype=np.int64)
    barr = np.array(bvecs, dtype=np.int64)
    n = aarr.shape[1]
    rows: list[tuple[int, ...]] = []
    for lo in range(0, len(avecs), 128):
        ab = aarr[lo:lo + 128]
        if op == "lcm":
            grid = np.maximum(ab[:, None, :], barr[None, :, :])
        else:
            grid = ab[:, None, :] + barr[None, :, :]
        rows.extend(map(tuple, grid.reshape(-1, n).tolist()))
    return rows


@lru_cache(maxsize=512)
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """All ways to write `total` as an ordered sum of `parts` naturals."""
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


# ---------------------------------------------------------------------------
# ideal operations


def minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generating set: drop every monomial divisible by another."""
    vecs = minimal_vectors(m.exponents for m in monomials)
    return [Monomial(v) for v in vecs]


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    """Ideal membership: some minimal generator divides m."""
    if len(m.exponents) != I.ambient_dim:
        raise DimensionMismatchError("monomial and ideal disagree on ring")
    return any(g.divides(m) for g in I.gens)


def _from_vectors(dim: int, vectors: list[tuple[int, ...]]) -> MonomialIdeal:
    vecs = minimal_vectors(vectors)
    return MonomialIdeal(dim, tuple(Monomial(v) for v in vecs))


def _intersect_with_simplex_power(I: MonomialIdeal, s_vars, m: int) -> MonomialIdeal:
    """I meet P^m where P is the prime on s_vars: each generator a of I needs
    its S-degree topped up to m, in every possible distribution."""
    out: list[tuple[int, ...]] = []
    for g in I.gens:
        have = sum(g.exponents[i] for i in s_vars)
        short = m - have
        if short <= 0:
            out.append(g.exponents)
            continue
        for combo in _compositions(short, len(s_vars)):
            v = list(g.exponents)
            for i, extra in zip(s_vars, combo):
                v[i] += extra
            out.append(tuple(v))
    return _from_vectors(I.ambient_dim, out)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.ambient_dim)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    for A, B in ((I, J), (J, I)):
        sp = B.simplex_power
        if sp is not None:
            return _intersect_with_simplex_power(A, sp[0], sp[1])
    return _from_vectors(I.ambient_dim, _pairwise_combine(list(I.vectors), list(J.vectors), "lcm"))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.ambient_dim)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    return _from_vectors(I.ambient_dim, _pairwise_combine(list(I.vectors), list(J.vectors), "add"))


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """t-th power, minimalizing after every product so intermediate
    generator sets never carry redundant elements."""
    if t < 0:
        raise ValueError("negative power of an ideal")
    if t == 0:
        return MonomialIdeal.unit(I.ambient_dim)
    if I.is_zero or I.is_unit or t == 1:
        return I
    if all(g.degree == 1 for g in I.gens):
        # power of a monomial prime: all degree-t monomials in its variables
        s_vars = [g.support[0] for g in I.gens]
        out = []
        for combo in _compositions(t, len(s_vars)):
            v = [0] * I.ambient_dim
            for i, e in zip(s_vars, combo):
                v[i] = e
            out.append(tuple(v))
        return _from_vectors(I.ambient_dim, out)
    acc = I
    for _ in range(t - 1):
        acc = multiply(acc, I)
    return acc


def subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Exact containment I <= J (every minimal generator of I lies in J)."""
    _check_same_ring(I, J)
    if I.is_zero:
        return True
    if J.is_zero:
        return False
    return all(_any_divisor_mask(list(I.vectors), list(J.vectors)))


def containment_with_m(f: Monomial, J: MonomialIdeal, s: int) -> bool:
    """Membership of f in m^s * J, where m is the maximal ideal of the
    variables: some minimal generator h of J divides f with
    deg f - deg h >= s.  s = 0 degenerates to plain membership."""
    if len(f.exponents) != J.ambient_dim:
        raise DimensionMismatchError("monomial and ideal disagree on ring")
    if s < 0:
        raise ValueError("s must be non-negative")
    if J.is_zero:
        return False
    return _any_divisor_mask([f.exponents], list(J.vectors), min_gap=s)[0]


def radical(I: MonomialIdeal) -> MonomialIdeal:
    """Cap every exponent at 1, then minimalize."""
    if I.is_zero:
        return I
    return _from_vectors(
        I.ambient_dim,
        [tuple(min(e, 1) for e in g.exponents) for g in I.gens])


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(g.is_squarefree for g in I.gens)


def maximal_ideal(ambient_dim: int) -> MonomialIdeal:
    return MonomialIdeal.make(
        ambient_dim,
        [Monomial(tuple(1 if j == i else 0 for j in range(ambient_dim)))
         for i in range(ambient_dim)])


def degree_monomials(ambient_dim: int, degree: int) -> list[Monomial]:
    """All monomials of the given total degree (used by brute-force oracles)."""
    return [Monomial(c) for c in _compositions(degree, ambient_dim)]


def iter_box(corner: Sequence[int]):
    """Iterate every exponent vector 0 <= v <= corner componentwise."""
    return itertools.product(*(range(c + 1) for c in corner))
