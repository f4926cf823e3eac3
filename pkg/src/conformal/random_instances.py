"""
Seeded random data for property checks.

Everything here takes a ``numpy.random.Generator`` so that callers control
reproducibility (``numpy.random.default_rng(seed)``).
"""

import logging
from typing import List, Tuple

import numpy as np

from exactpoly import MPoly, rat

from .algebra import (
    ConformalAlgebra,
    ConformalBimodule,
    regular_bimodule,
    zero_bimodule,
)
from .lambda_calculus import LambdaExpr, Table
from .library import dual_numbers, split_algebra, unit_algebra, zero_algebra
from .linear_map import ModuleMap

logger = logging.getLogger(__name__)


def _exponent_vectors(nvars: int, max_degree: int) -> List[Tuple[int, ...]]:
    """All exponent vectors over D, L1..Ln of total degree <= max_degree."""
    vectors: List[Tuple[int, ...]] = []

    def grow(prefix: Tuple[int, ...], left: int, slots: int) -> None:
        if slots == 0:
            vectors.append(prefix)
            return
        for e in range(left + 1):
            grow(prefix + (e,), left - e, slots - 1)

    grow((), max_degree, nvars + 1)
    return vectors


def random_mpoly(
    rng: np.random.Generator,
    nvars: int,
    max_degree: int = 1,
    density: float = 0.5,
    coeff_range: int = 3,
) -> MPoly:
    """Sparse polynomial with small integer (occasionally halved) coefficients."""
    terms = {}
    for exps in _exponent_vectors(nvars, max_degree):
        if rng.random() >= density:
            continue
        value = int(rng.integers(-coeff_range, coeff_range + 1))
        if value == 0:
            continue
        denominator = 2 if rng.random() < 0.2 else 1
        terms[exps] = rat(value, denominator)
    return MPoly.from_terms(nvars, terms)


def random_table(
    rng: np.random.Generator,
    arg_ranks: List[int],
    target_rank: int,
    max_degree: int = 1,
    density: float = 0.4,
) -> Table:
    """Random basis-tuple table for a map with the given argument ranks."""
    arity = len(arg_ranks)
    nvars = max(arity - 1, 0)
    table: Table = {}
    for key in np.ndindex(*arg_ranks) if arg_ranks else [()]:
        key = tuple(int(k) for k in key)
        vector = tuple(random_mpoly(rng, nvars, max_degree, density) for _ in range(target_rank))
        if any(not c.is_zero for c in vector):
            table[key] = vector
    return table


def random_module_map(
    rng: np.random.Generator,
    source,
    target,
    max_degree: int = 1,
    density: float = 0.5,
) -> ModuleMap:
    matrix = [
        [random_mpoly(rng, 0, max_degree, density) for _ in range(source.rank)]
        for _ in range(target.rank)
    ]
    return ModuleMap(source, target, matrix)


def random_element(rng: np.random.Generator, space, max_degree: int = 1, nvars: int = 0) -> LambdaExpr:
    return LambdaExpr(space, nvars, tuple(random_mpoly(rng, nvars, max_degree, 0.6) for _ in range(space.rank)))


def random_algebra(rng: np.random.Generator) -> ConformalAlgebra:
    """One of the small current algebras of rank <= 2."""
    builders = [unit_algebra, dual_numbers, split_algebra, lambda: zero_algebra(1), lambda: zero_algebra(2)]
    return builders[int(rng.integers(len(builders)))]()


def random_pair(rng: np.random.Generator) -> Tuple[ConformalAlgebra, ConformalBimodule]:
    """A validated algebra of rank <= 2 together with a bimodule over it."""
    T = random_algebra(rng)
    if rng.random() < 0.75:
        U = regular_bimodule(T)
    else:
        U = zero_bimodule(T, int(rng.integers(1, 3)))
    logger.debug("random pair %r / %r", T, U)
    return T, U


def random_invertible_matrix(rng: np.random.Generator, rank: int, max_degree: int = 1) -> List[List[MPoly]]:
    """
    Unimodular matrix over QQ[D]: a product of a diagonal of nonzero constants
    and a unipotent upper-triangular factor with polynomial entries.
    """
    matrix = [[MPoly.zero() for _ in range(rank)] for _ in range(rank)]
    for i in range(rank):
        value = 0
        while value == 0:
            value = int(rng.integers(-3, 4))
        matrix[i][i] = MPoly.const(value)
        for j in range(i + 1, rank):
            matrix[i][j] = random_mpoly(rng, 0, max_degree, 0.6)
    if rank > 1 and rng.random() < 0.5:
        matrix.reverse()
    return matrix
