import pytest

from symbpow.monomial import Monomial, MonomialIdeal
from symbpow.rng import SplitRng


def ideal_of(dim, *vecs) -> MonomialIdeal:
    return MonomialIdeal.make(dim, [Monomial(tuple(v)) for v in vecs])


@pytest.fixture
def rot3():
    """(x*y^2, y*z^2, z*x^2, x*y*z) in three variables: the classic ideal
    whose third symbolic power escapes m * I^2."""
    return ideal_of(3, (1, 2, 0), (0, 1, 2), (2, 0, 1), (1, 1, 1))


@pytest.fixture
def triples4():
    """(x*y*z, x*y*w, x*z*w, y*z*w): square-free, generated by the four
    degree-three products in four variables."""
    return ideal_of(4, (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 1))


@pytest.fixture
def edges3():
    """(x*y, x*z, y*z), the pairwise products in three variables."""
    return ideal_of(3, (1, 1, 0), (1, 0, 1), (0, 1, 1))


def random_squarefree_corpus(count, seed, dims=(3, 4, 5)):
    """Deterministic square-free sample ideals, together with the prime
    family each one was built from."""
    from symbpow.harness import _random_squarefree

    root = SplitRng(seed, ("corpus",))
    out = []
    for i in range(count):
        rng = root.child(f"ideal{i}")
        nvars = dims[rng.randint(0, len(dims) - 1)]
        out.append(_random_squarefree(rng, nvars))
    return out


def random_primary_corpus(count, seed, dims=(2, 3), max_exp=3):
    """Ideals containing a pure power of every variable, so the maximal
    ideal is the only (and maximal) associated prime."""
    root = SplitRng(seed, ("primary",))
    out = []
    for i in range(count):
        rng = root.child(f"ideal{i}")
        nvars = dims[rng.randint(0, len(dims) - 1)]
        gens = []
        for v in range(nvars):
            exp = rng.child(f"pure{v}").randint(1, max_exp)
            gens.append(Monomial(tuple(exp if j == v else 0 for j in range(nvars))))
        extras = rng.randint(0, 2)
        for j in range(extras):
            g = rng.child(f"extra{j}")
            vec = tuple(g.randint(0, max_exp) for _ in range(nvars))
            gens.append(Monomial(vec))
        I = MonomialIdeal.make(nvars, gens)
        if I.is_proper:
            out.append(I)
    return out


def random_general_corpus(count, seed, dims=(3, 4), max_exp=4, max_gens=5):
    from symbpow.harness import _random_general

    root = SplitRng(seed, ("general",))
    out = []
    for i in range(count):
        rng = root.child(f"ideal{i}")
        nvars = dims[rng.randint(0, len(dims) - 1)]
        out.append(_random_general(rng, nvars, max_exp, max_gens))
    return out
