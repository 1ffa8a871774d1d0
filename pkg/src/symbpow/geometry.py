"""Newton polyhedra, the symbolic polyhedron, and its exact geometry.

The Newton polyhedron of a monomial ideal J is conv(exponent vectors of the
generators) + the non-negative orthant; its recession cone is always the
whole orthant.  The symbolic polyhedron of I is the intersection of the
Newton polyhedra of the localizations of I at its maximal associated
primes, stored V-style: one generator matrix per component prime.

Everything here is exact.  Membership questions are rational LP
feasibility; alpha (the least coordinate sum over the polyhedron) is one
simplex solve; vertices and facets are enumerated by brute force over
dimension-sized subsets, which is honest at desk scale and guarded by
explicit budgets (ResourceLimitError, never truncation).

A fast path recognizes components that are powers of monomial primes
(P_S)^m, whose polyhedron is exactly {a >= 0 : sum of a over S >= m}; for
square-free input every component has this shape, which is what makes the
large randomized sweeps affordable.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, lcm

from . import lp
from . import results as R
from .decomposition import MonomialPrime, big_height, localize, max_associated_primes
from .errors import ResourceLimitError
from .linalg import nullspace, solve_square
from .monomial import Monomial, MonomialIdeal, contains, power
from .results import CheckResult
from .rng import SplitRng
from .symbolic import symbolic_power

MAX_ENUM_DIM = 6
DEFAULT_MAX_FACETS = 72
DEFAULT_MAX_CANDIDATES = 250_000


@dataclass(frozen=True)
class NewtonPolyhedron:
    """conv(generator exponent vectors) + non-negative orthant."""

    ambient_dim: int
    gens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.gens:
            raise ValueError("a Newton polyhedron needs at least one generator")
        if any(len(g) != self.ambient_dim for g in self.gens):
            raise ValueError("generator dimension mismatch")
        object.__setattr__(self, "gens", tuple(sorted(self.gens)))

    @cached_property
    def simplex_power(self) -> tuple[tuple[int, ...], int] | None:
        degrees = {sum(g) for g in self.gens}
        if len(degrees) != 1:
            return None
        m = degrees.pop()
        if m < 1:
            return None
        s_vars = sorted({i for g in self.gens for i, e in enumerate(g) if e})
        if len(self.gens) != comb(m + len(s_vars) - 1, len(s_vars) - 1):
            return None
        return tuple(s_vars), m


def newton_polyhedron(I: MonomialIdeal) -> NewtonPolyhedron:
    if I.is_zero:
        raise ValueError("the zero ideal has an empty Newton polyhedron")
    return NewtonPolyhedron(I.ambient_dim, I.vectors)


@dataclass(frozen=True)
class SymbolicPolyhedron:
    ambient_dim: int
    components: tuple[tuple[MonomialPrime, NewtonPolyhedron], ...]


@lru_cache(maxsize=512)
def symbolic_polyhedron(I: MonomialIdeal) -> SymbolicPolyhedron:
    """One Newton polyhedron per maximal associated prime, in the order of
    the primes."""
    if I.is_zero or I.is_unit:
        raise ValueError("need a proper non-zero ideal")
    comps = []
    for P in max_associated_primes(I):
        comps.append((P, newton_polyhedron(localize(I, P))))
    return SymbolicPolyhedron(I.ambient_dim, tuple(comps))


def _as_point(a, dim: int) -> tuple[Fraction, ...]:
    pt = tuple(Fraction(x) for x in a)
    if len(pt) != dim:
        raise ValueError(f"point has {len(pt)} coordinates, expected {dim}")
    return pt


def np_member(N: NewtonPolyhedron, a) -> bool:
    """Exact membership of a rational point in the Newton polyhedron:
    feasibility of  G lambda <= a, sum lambda = 1, lambda >= 0."""
    pt = _as_point(a, N.ambient_dim)
    if any(x < 0 for x in pt):
        return False
    sp = N.simplex_power
    if sp is not None:
        s_vars, m = sp
        return sum(pt[i] for i in s_vars) >= m
    k = len(N.gens)
    matrix = [[Fraction(g[i]) for g in N.gens] for i in range(N.ambient_dim)]
    rhs = list(pt)
    senses = [lp.LE] * N.ambient_dim
    matrix.append([Fraction(1)] * k)
    rhs.append(Fraction(1))
    senses.append(lp.EQ)
    return lp.feasible_point(matrix, rhs, senses) is not None


def member_scaled(Q: SymbolicPolyhedron, a, m) -> bool:
    """Is a/m in every component of Q?  m is a positive integer or rational."""
    m = Fraction(m)
    if m <= 0:
        raise ValueError("scale must be positive")
    pt = tuple(Fraction(x) / m for x in _as_point(a, Q.ambient_dim))
    return all(np_member(N, pt) for _, N in Q.components)


# ---------------------------------------------------------------------------
# alpha via one exact LP


def _optimize_over(Q: SymbolicPolyhedron, objective) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Minimize a positive linear objective over Q.  Components that are
    prime powers contribute one halfspace; general components contribute a
    convex-weight block (a >= G lambda, sum lambda = 1)."""
    d = Q.ambient_dim
    blocks: list[tuple] = []  # (prime, gens) for general components
    simple_rows: list[tuple[tuple[int, ...], int]] = []
    for _, N in Q.components:
        sp = N.simplex_power
        if sp is not None:
            simple_rows.append(sp)
        else:
            blocks.append(N.gens)
    ncols = d + sum(len(g) for g in blocks)
    matrix: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    senses: list[str] = []
    for s_vars, m in simple_rows:
        row = [Fraction(0)] * ncols
        for i in s_vars:
            row[i] = Fraction(1)
        matrix.append(row)
        rhs.append(Fraction(m))
        senses.append(lp.GE)
    col0 = d
    for gens in blocks:
        k = len(gens)
        for i in range(d):
            row = [Fraction(0)] * ncols
            row[i] = Fraction(1)
            for j, g in enumerate(gens):
                row[col0 + j] = Fraction(-g[i])
            matrix.append(row)
            rhs.append(Fraction(0))
            senses.append(lp.GE)
        row = [Fraction(0)] * ncols
        for j in range(k):
            row[col0 + j] = Fraction(1)
        matrix.append(row)
        rhs.append(Fraction(1))
        senses.append(lp.EQ)
        col0 += k
    cost = [Fraction(c) for c in objective] + [Fraction(0)] * (ncols - d)
    result = lp.solve(lp.LinearProgram.make(matrix, rhs, senses, cost))
    assert result.status == lp.OPTIMAL, f"alpha LP ended {result.status}"
    point = result.solution[:d]
    for _, N in Q.components:
        assert np_member(N, point), "LP point escapes a component"
    return result.value, point


@lru_cache(maxsize=512)
def alpha_polyhedron(Q: SymbolicPolyhedron) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Least coordinate sum over Q and a point attaining it."""
    return _optimize_over(Q, [Fraction(1)] * Q.ambient_dim)


# ---------------------------------------------------------------------------
# Caratheodory decomposition and realizing denominators


@dataclass(frozen=True)
class CaratheodoryDecomposition:
    """a = sum of weight * vertex + cone, with at most height(P) non-zero
    convex weights over the component's generator exponent vectors."""

    point: tuple[Fraction, ...]
    weights: tuple[tuple[tuple[int, ...], Fraction], ...]
    cone: tuple[Fraction, ...]

    def reconstruction(self) -> tuple[Fraction, ...]:
        total = list(self.cone)
        for vec, w in self.weights:
            for i, e in enumerate(vec):
                total[i] += w * e
        return tuple(total)

    def denominator(self) -> int:
        dens = [w.denominator for _, w in self.weights]
        dens += [c.denominator for c in self.cone]
        return lcm(*dens) if dens else 1


def caratheodory_decompose(N: NewtonPolyhedron, P: MonomialPrime, a) -> CaratheodoryDecomposition:
    """Exact decomposition of a point of N as a convex combination of at
    most height(P) generator exponent vectors plus an orthant part.

    Starts from a basic feasible solution of the transportation system
    (at most height(P) + 1 non-zero entries), then either cancels an affine
    dependence among the active vectors or rides a coordinate ray to the
    boundary, both of which retire one convex weight.
    """
    pt = _as_point(a, N.ambient_dim)
    pvars = list(P.variables)
    h = len(pvars)
    outside = [i for i in range(N.ambient_dim) if i not in set(pvars)]
    for g in N.gens:
        if any(g[i] for i in outside):
            raise ValueError("component generators must be supported inside the prime")
    if not np_member(N, pt):
        raise ValueError("point is outside the Newton polyhedron")

    k = len(N.gens)
    # variables: lambda_0..lambda_{k-1}, then c_i for i in pvars
    matrix: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for idx, i in enumerate(pvars):
        row = [Fraction(g[i]) for g in N.gens] + [Fraction(0)] * h
        row[k + idx] = Fraction(1)
        matrix.append(row)
        rhs.append(pt[i])
    matrix.append([Fraction(1)] * k + [Fraction(0)] * h)
    rhs.append(Fraction(1))
    base = lp.feasible_point(matrix, rhs, [lp.EQ] * (h + 1))
    assert base is not None, "membership holds but the certificate LP failed"
    lam = list(base[:k])

    def active():
        return [j for j in range(k) if lam[j] > 0]

    act = active()
    while len(act) > h:
        cols = [[Fraction(N.gens[j][i]) for j in act] for i in pvars]
        cols.append([Fraction(1)] * len(act))
        kern = nullspace(cols)
        if kern:
            mu = kern[0]
        else:
            # h+1 affinely independent points: ride the first coordinate ray
            # of the prime down to the boundary of their simplex
            target = [Fraction(1)] + [Fraction(0)] * (h - 1) + [Fraction(0)]
            square = [[Fraction(N.gens[j][i]) for j in act] for i in pvars]
            square.append([Fraction(1)] * len(act))
            mu = solve_square(square, target)
            assert mu is not None
        if all(m <= 0 for m in mu):
            mu = [-m for m in mu]
        t = min(lam[j] / m for j, m in zip(act, mu) if m > 0)
        for j, m in zip(act, mu):
            lam[j] -= t * m
        if not kern:
            pass  # the ray contribution t lands in the cone part below
        act = active()

    cone = list(pt)
    for j in act:
        for i in range(N.ambient_dim):
            cone[i] -= lam[j] * N.gens[j][i]
    assert all(c >= 0 for c in cone), "negative orthant part"
    assert sum(lam[j] for j in act) == 1
    weights = tuple((N.gens[j], lam[j]) for j in act)
    deco = CaratheodoryDecomposition(pt, weights, tuple(cone))
    assert deco.reconstruction() == pt
    return deco


def realizing_denominator(I: MonomialIdeal, a) -> int:
    """Least common denominator b of Caratheodory decompositions of a over
    every component of the symbolic polyhedron; x^(b*a) then lies in the
    b-th symbolic power, which is verified before returning."""
    Q = symbolic_polyhedron(I)
    pt = _as_point(a, I.ambient_dim)
    if not member_scaled(Q, pt, 1):
        raise ValueError("point is outside the symbolic polyhedron")
    b = 1
    decos = []
    for P, N in Q.components:
        deco = caratheodory_decompose(N, P, pt)
        decos.append(deco)
        b = lcm(b, deco.denominator())
    scaled = [b * x for x in pt]
    assert all(x.denominator == 1 for x in scaled)
    witness = Monomial(tuple(int(x) for x in scaled))
    assert contains(symbolic_power(I, b), witness), \
        "certificate monomial escapes the symbolic power"
    return b


# ---------------------------------------------------------------------------
# facet / vertex enumeration (desk scale, budgeted)


def _canonical_facet(normal, offset):
    lead = next((x for x in normal if x != 0), None)
    if lead is None:
        return None
    if lead < 0:
        normal = [-x for x in normal]
        offset = -offset
        lead = -lead
    if any(x < 0 for x in normal):
        return None  # recession cone (the orthant) escapes the halfspace
    return tuple(x / lead for x in normal), offset / lead


def component_facets(N: NewtonPolyhedron,
                     max_candidates: int = DEFAULT_MAX_CANDIDATES):
    """All facet inequalities (normal, offset) with normal.x >= offset, by
    brute force over (points, orthant directions) subsets of size d; extra
    supporting halfspaces are harmless and duplicates are removed by the
    canonical first-non-zero-coefficient-one scaling."""
    d = N.ambient_dim
    sp = N.simplex_power
    if sp is not None:
        s_vars, m = sp
        normal = tuple(Fraction(1) if i in s_vars else Fraction(0) for i in range(d))
        return [(normal, Fraction(m))]
    V = list(N.gens)
    total = sum(comb(len(V), k) * comb(d, d - k) for k in range(1, min(d, len(V)) + 1))
    if total > max_candidates:
        raise ResourceLimitError("facet candidate subsets", total, max_candidates)
    found = set()
    for k in range(1, min(d, len(V)) + 1):
        for S in itertools.combinations(V, k):
            point_rows = [[Fraction(v[i] - S[0][i]) for i in range(d)] for v in S[1:]]
            for D in itertools.combinations(range(d), d - k):
                rows = list(point_rows)
                for i in D:
                    unit = [Fraction(0)] * d
                    unit[i] = Fraction(1)
                    rows.append(unit)
                if not rows:
                    continue
                kern = nullspace(rows)
                if len(kern) != 1:
                    continue
                packed = _canonical_facet(kern[0], sum(x * e for x, e in zip(kern[0], S[0])))
                if packed is None:
                    continue
                normal, offset = packed
                if all(sum(n * e for n, e in zip(normal, v)) >= offset for v in V):
                    found.add((normal, offset))
    return sorted(found)


def enumerate_vertices(Q: SymbolicPolyhedron,
                       max_facets: int = DEFAULT_MAX_FACETS,
                       max_candidates: int = DEFAULT_MAX_CANDIDATES) -> tuple:
    """All vertices of Q, exactly.  Collects every component's facets plus
    the coordinate halfspaces, solves each d-subset of equalities, and keeps
    the solutions that satisfy every inequality and lie in every component.
    Budgets are hard limits; exceeding one raises ResourceLimitError."""
    d = Q.ambient_dim
    if d > MAX_ENUM_DIM:
        raise ResourceLimitError("ambient dimension", d, MAX_ENUM_DIM)
    ineqs = set()
    for _, N in Q.components:
        ineqs.update(component_facets(N, max_candidates))
    for i in range(d):
        unit = [Fraction(0)] * d
        unit[i] = Fraction(1)
        ineqs.add((tuple(unit), Fraction(0)))
    if len(ineqs) > max_facets:
        raise ResourceLimitError("facet count", len(ineqs), max_facets)
    ineqs = sorted(ineqs)
    n_subsets = comb(len(ineqs), d)
    if n_subsets > max_candidates:
        raise ResourceLimitError("vertex candidate subsets", n_subsets, max_candidates)
    vertices = set()
    for chosen in itertools.combinations(ineqs, d):
        sol = solve_square([list(n) for n, _ in chosen], [c for _, c in chosen])
        if sol is None or any(x < 0 for x in sol):
            continue
        if any(sum(n * x for n, x in zip(normal, sol)) < offset for normal, offset in ineqs):
            continue
        if all(np_member(N, sol) for _, N in Q.components):
            vertices.add(tuple(sol))
    assert vertices, "a pointed non-empty polyhedron must have a vertex"
    return tuple(sorted(vertices))


# ---------------------------------------------------------------------------
# staircase containment check


def stairs_member(J: MonomialIdeal, point) -> bool:
    """Is the rational point in the up-closure of J's generator exponents?"""
    pt = _as_point(point, J.ambient_dim)
    return any(all(Fraction(e) <= x for e, x in zip(g.exponents, pt))
               for g in J.gens)


def check_stairs_containment(I: MonomialIdeal, r: int, sample_count: int = 8,
                             seed: int = 0,
                             max_facets: int = DEFAULT_MAX_FACETS,
                             max_candidates: int = DEFAULT_MAX_CANDIDATES) -> CheckResult:
    """e*r*Q sits inside the staircase region of I^r: checked on every
    vertex of Q plus pseudo-random convex combinations; if vertex
    enumeration is over budget, falls back to sampling LP optima of random
    positive objectives (flagged sampled_only)."""
    if r < 1:
        raise ValueError("r must be at least 1")
    start = time.perf_counter()
    e = big_height(I)
    Q = symbolic_polyhedron(I)
    Ir = power(I, r)
    d = Q.ambient_dim
    rng = SplitRng(seed, ("stairs", r))
    points: list[tuple[Fraction, ...]] = []
    sampled_only = False
    vertex_count = 0
    try:
        verts = enumerate_vertices(Q, max_facets, max_candidates)
        points.extend(verts)
        vertex_count = len(verts)
        for _ in range(sample_count):
            w = rng.convex_weights(len(verts))
            points.append(tuple(sum(wi * v[i] for wi, v in zip(w, verts))
                                for i in range(d)))
    except ResourceLimitError:
        sampled_only = True
        for _ in range(sample_count):
            objective = [Fraction(rng.randint(1, 64)) for _ in range(d)]
            _, point = _optimize_over(Q, objective)
            points.append(point)
    bad = None
    for pt in points:
        scaled = tuple(e * r * x for x in pt)
        if not stairs_member(Ir, scaled):
            bad = pt
            break
    details = {"e": e, "vertices": vertex_count, "samples": sample_count,
               "sampled_only": sampled_only, "seed": seed}
    if bad is not None:
        details["witness_point"] = [str(x) for x in bad]
    return CheckResult(
        name="stairs",
        verdict=R.HOLDS if bad is None else R.FAILS,
        params={"r": r},
        details=details,
        elapsed=time.perf_counter() - start)
