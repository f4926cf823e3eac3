"""
Degree-truncated cohomology of a twisted Rota-Baxter operator.

C^m_{<=d} is spanned by the cochains U^(x m) -> T whose single nonzero entry
is a monomial D^a L1^b1 ... of total degree <= d times a basis vector of T.
The coboundary raises total degree by at most

    g = 2 deg R + max(deg T, deg U actions, deg H)

so images are collected in the window of degree d + g.  Dimensions:

    dim Z = #columns - rank(d_m)
    dim B = rank(d_{m-1}) - rank(rows of d_{m-1} above degree d)
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from exactpoly import MPoly, Rat
from hochschild import Cochain, CochainError
from linf import UCochain, d_R

from .induced import require_trb
from .operator import TRBOperator
from .twisted import twisted_delta

logger = logging.getLogger(__name__)

Coordinate = Tuple[Tuple[int, ...], int, Tuple[int, ...]]
ROUTES = ("twisted", "linf")


@dataclass
class CohomologyReport:
    """Truncated dimensions of Z^n, B^n and H^n at truncation degree d."""
    degree: int
    truncation: int
    dim_cocycles: int
    dim_coboundaries_in_window: int
    dim_quotient: int
    stabilized: bool
    route: str = "twisted"
    growth: int = 0

    def to_dict(self) -> Dict:
        return asdict(self)


def monomials(nvars: int, max_degree: int) -> List[Tuple[int, ...]]:
    """Exponent vectors over D, L1..Ln of total degree <= max_degree, graded."""
    result = []
    for total in range(max_degree + 1):
        for exps in itertools.product(range(total + 1), repeat=nvars + 1):
            if sum(exps) == total:
                result.append(exps)
    return result


def cochain_basis(U, arity: int, d: int) -> List[Coordinate]:
    """
    Coordinates of C^arity_{<=d}.  A rank-0 U carries no cochains in any
    degree, including the 0-cochains that would otherwise be elements of T.
    """
    if U.rank == 0:
        return []
    T = U.over
    nvars = max(arity - 1, 0)
    keys = list(itertools.product(range(U.rank), repeat=arity))
    return [(key, i, exps) for key in keys for i in range(T.rank) for exps in monomials(nvars, d)]


def from_coordinates(U, arity: int, coords: Dict[Coordinate, Rat], name: str = "g") -> UCochain:
    T = U.over
    nvars = max(arity - 1, 0)
    table = {}
    for (key, i, exps), value in coords.items():
        if not value:
            continue
        vector = list(table.get(key, tuple(MPoly.zero(nvars) for _ in range(T.rank))))
        vector[i] = vector[i] + MPoly.monomial(exps, value)
        table[key] = tuple(vector)
    return UCochain(U, T, arity, table, name)


def coordinates(g: Cochain) -> Dict[Coordinate, Rat]:
    coords = {}
    for key, vector in g.table.items():
        for i, c in enumerate(vector):
            for exps, value in c.terms():
                coords[(key, i, exps)] = value
    return coords


def growth_bound(R: TRBOperator, H: Cochain) -> int:
    T, U = R.algebra, R.module
    structure = max(T.max_degree(), U.max_degree(), H.max_degree(), 0)
    return 2 * max(R.max_degree(), 0) + structure


def _differential(R: TRBOperator, H: Cochain, route: str) -> Callable[[UCochain], UCochain]:
    if route == "twisted":
        return lambda g: twisted_delta(g, R, H, check=False)
    if route == "linf":
        Rc = R.as_cochain()
        return lambda g: d_R(g, Rc, H, check=False)
    raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")


def _images(
    R: TRBOperator, H: Cochain, arity: int, d: int, route: str, threads: int
) -> Tuple[List[Coordinate], List[Dict[Coordinate, Rat]]]:
    U = R.module
    basis = cochain_basis(U, arity, d)
    delta = _differential(R, H, route)

    def column(coordinate: Coordinate) -> Dict[Coordinate, Rat]:
        return coordinates(delta(from_coordinates(U, arity, {coordinate: QQ(1)})))

    if threads > 1 and len(basis) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            columns = list(pool.map(column, basis))
    else:
        columns = [column(c) for c in basis]

    window = d + growth_bound(R, H)
    for col in columns:
        for (_, _, exps) in col:
            if sum(exps) > window:
                logger.error("coboundary image of degree %d leaves the window %d", sum(exps), window)
                raise CochainError(f"coboundary image leaves the degree window {window}")
    logger.info("assembled %d columns of the arity-%d coboundary (route %s)", len(columns), arity, route)
    return basis, columns


def _matrix(columns: Sequence[Dict[Coordinate, Rat]], rows: Sequence[Coordinate]) -> DomainMatrix:
    index = {r: n for n, r in enumerate(rows)}
    data = [[QQ(0)] * len(columns) for _ in rows]
    for j, col in enumerate(columns):
        for coordinate, value in col.items():
            n = index.get(coordinate)
            if n is not None:
                data[n][j] = value
    return DomainMatrix(data, (len(rows), len(columns)), QQ)


def _rank(columns: Sequence[Dict[Coordinate, Rat]], keep: Optional[Callable[[Coordinate], bool]] = None) -> int:
    rows = sorted({c for col in columns for c in col if keep is None or keep(c)})
    if not rows or not columns:
        return 0
    return _matrix(columns, rows).rank()


def _dimensions(R: TRBOperator, H: Cochain, n: int, d: int, route: str, threads: int) -> Tuple[int, int]:
    basis, columns = _images(R, H, n, d, route, threads)
    dim_cocycles = len(basis) - _rank(columns)
    dim_coboundaries = 0
    if n > 0:
        _, previous = _images(R, H, n - 1, d, route, threads)
        dim_image = _rank(previous)
        above = _rank(previous, keep=lambda c: sum(c[2]) > d)
        dim_coboundaries = dim_image - above
    return dim_cocycles, dim_coboundaries


def cohomology(
    R: TRBOperator,
    H: Cochain,
    n: int,
    d: int,
    route: str = "twisted",
    threads: int = 1,
    check: bool = True,
) -> CohomologyReport:
    """
    Truncated dimensions of Z^n, B^n and H^n of the operator.

    Args:
        R: The operator
        H: Its twisting cocycle
        n: Cochain degree
        d: Truncation degree (>= 0)
        route: ``"twisted"`` for the seven-term coboundary, ``"linf"`` for d_R
        threads: Worker threads for column assembly
        check: Reject operators that fail the twisted Rota-Baxter identity

    Returns:
        CohomologyReport; ``stabilized`` compares the quotient at d and d + 1
    """
    if d < 0 or n < 0:
        raise ValueError("degree and truncation must be nonnegative")
    if check:
        require_trb(R, H)
    z, b = _dimensions(R, H, n, d, route, threads)
    z_next, b_next = _dimensions(R, H, n, d + 1, route, threads)
    report = CohomologyReport(
        degree=n,
        truncation=d,
        dim_cocycles=z,
        dim_coboundaries_in_window=b,
        dim_quotient=z - b,
        stabilized=(z - b) == (z_next - b_next),
        route=route,
        growth=growth_bound(R, H),
    )
    logger.info("H^%d at truncation %d: Z=%d B=%d", n, d, z, b)
    return report


def cocycle_basis(
    R: TRBOperator, H: Cochain, n: int, d: int, route: str = "twisted", threads: int = 1
) -> List[UCochain]:
    """An exact basis of Z^n_{<=d}, one UCochain per kernel vector."""
    basis, columns = _images(R, H, n, d, route, threads)
    if not basis:
        return []
    rows = sorted({c for col in columns for c in col})
    if rows:
        kernel = _matrix(columns, rows).nullspace().to_list()
    else:
        kernel = [[QQ(1) if j == k else QQ(0) for j in range(len(basis))] for k in range(len(basis))]
    cocycles = []
    for number, vector in enumerate(kernel, start=1):
        coords = {basis[j]: value for j, value in enumerate(vector) if value}
        cocycles.append(from_coordinates(R.module, n, coords, f"z{number}"))
    return cocycles


def solve_coboundary(
    R: TRBOperator, H: Cochain, z: UCochain, d: int, route: str = "linf"
) -> Optional[UCochain]:
    """
    Find p in T of degree <= d with d_R(p) = z, or None at this truncation.

    The returned 0-cochain is one particular solution (free coordinates 0).
    """
    basis, columns = _images(R, H, 0, d, route, 1)
    target = coordinates(z)
    rows = sorted({c for col in columns for c in col} | set(target))
    if not rows:
        return from_coordinates(R.module, 0, {}, "p")
    if not basis:
        return None
    augmented = _matrix(list(columns) + [target], rows)
    reduced, pivots = augmented.rref()
    last = len(basis)
    if last in pivots:
        return None
    entries = reduced.to_list()
    coords = {basis[col]: entries[row][last] for row, col in enumerate(pivots)}
    return from_coordinates(R.module, 0, coords, "p")
