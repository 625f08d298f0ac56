"""Decision procedures in a ring of integers given by an integral basis.

alpha * gamma = beta is the linear system M_alpha gamma = beta, where the
columns of M_alpha are the coordinates of alpha * b_j. With d = det M_alpha
= N(alpha) and adj the integer adjugate, gamma = adj beta / d, so
divisibility is a congruence check on an integer vector.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix

from ..exceptions import PresentationError
from .presentation import AlgInt, NumberRingPresentation, basis_mul

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]

def _check(p: NumberRingPresentation, *elements: Sequence[int]) -> None:
    for e in elements:
        if len(e) != p.n:
            raise PresentationError(f"rank mismatch: expected {p.n} coordinates, got {len(e)}")


def nr_add(p: NumberRingPresentation, a: AlgInt, b: AlgInt) -> AlgInt:
    _check(p, a, b)
    return tuple(x + y for x, y in zip(a, b))


def nr_sub(p: NumberRingPresentation, a: AlgInt, b: AlgInt) -> AlgInt:
    _check(p, a, b)
    return tuple(x - y for x, y in zip(a, b))


def nr_mul(p: NumberRingPresentation, a: AlgInt, b: AlgInt) -> AlgInt:
    _check(p, a, b)
    return basis_mul(p.n, p.table, tuple(a), tuple(b))


def mult_matrix(p: NumberRingPresentation, alpha: AlgInt) -> IntMatrix:
    """M_alpha: column j holds the coordinates of alpha * b_j."""
    _check(p, alpha)
    columns = [nr_mul(p, alpha, p.basis(j)) for j in range(p.n)]
    return tuple(tuple(columns[j][r] for j in range(p.n)) for r in range(p.n))


def norm(p: NumberRingPresentation, alpha: AlgInt) -> int:
    """N(alpha) = det M_alpha."""
    return _solver(p, tuple(alpha))[0]


def nr_is_unit(p: NumberRingPresentation, alpha: AlgInt) -> bool:
    return abs(norm(p, alpha)) == 1


@lru_cache(maxsize=4096)
def _solver(p: NumberRingPresentation, alpha: AlgInt) -> Tuple[int, IntMatrix]:
    """(det M_alpha, adj M_alpha), computed once per alpha."""
    m = Matrix(mult_matrix(p, alpha))
    det = int(m.det())
    if det == 0 and any(alpha):
        raise PresentationError("presentation is not an integral domain")
    if p.n == 1:
        return det, ((1,),)
    adj = m.adjugate()
    return det, tuple(tuple(int(adj[r, c]) for c in range(p.n)) for r in range(p.n))


def nr_divides(
    p: NumberRingPresentation, alpha: AlgInt, beta: AlgInt
) -> Tuple[bool, Optional[AlgInt]]:
    """(alpha | beta, beta / alpha when it divides)."""
    _check(p, alpha, beta)
    if not any(alpha):
        raise PresentationError("division by zero")
    det, adj = _solver(p, tuple(alpha))
    quotient = []
    for row in adj:
        numerator = sum(a * b for a, b in zip(row, beta))
        q, r = divmod(numerator, det)
        if r:
            return False, None
        quotient.append(q)
    return True, tuple(quotient)


def _divides(p: NumberRingPresentation, alpha: AlgInt, beta: AlgInt) -> bool:
    return nr_divides(p, alpha, beta)[0]


def _rank(c: int) -> int:
    # 0, 1, -1, 2, -2, ...
    if c > 0:
        return 2 * c - 1
    return -2 * c


def _shell(n: int, radius: int) -> Iterator[AlgInt]:
    """Points of max-norm exactly ``radius``, in search order."""
    points = [
        pt
        for pt in product(range(-radius, radius + 1), repeat=n)
        if max((abs(c) for c in pt), default=0) == radius
    ]
    points.sort(key=lambda pt: tuple(_rank(c) for c in reversed(pt)))
    return iter(points)


def radius_bound(p: NumberRingPresentation, alpha: AlgInt) -> int:
    """Max-norm radius that holds a representative of every class mod alpha.

    Each class meets the half-open box sum t_j * col_j with t_j in [0, 1), whose
    points have max-norm at most the sum of the column max-norms of M_alpha.
    """
    m = mult_matrix(p, alpha)
    return sum(max(abs(m[r][j]) for r in range(p.n)) for j in range(p.n))


def quotient_reps(
    p: NumberRingPresentation, alpha: AlgInt, max_radius: Optional[int] = None
) -> List[AlgInt]:
    """|N(alpha)| pairwise incongruent representatives of O/<alpha>.

    ``max_radius`` caps the search; by default it is :func:`radius_bound`,
    which always suffices.
    """
    _check(p, alpha)
    if not any(alpha):
        raise PresentationError("quotient by zero is infinite")
    size = abs(norm(p, alpha))
    if size == 1:
        raise PresentationError("quotient by a unit is trivial")
    if max_radius is None:
        max_radius = radius_bound(p, alpha)
    reps: List[AlgInt] = []
    for radius in range(max_radius + 1):
        for candidate in _shell(p.n, radius):
            if all(not _divides(p, alpha, nr_sub(p, candidate, r)) for r in reps):
                reps.append(candidate)
                if len(reps) == size:
                    logger.debug("found %d representatives by radius %d", size, radius)
                    return reps
    raise PresentationError(
        f"representative search exceeded radius {max_radius} with {len(reps)} of {size} found"
    )


def reduce(
    p: NumberRingPresentation,
    alpha: AlgInt,
    beta: AlgInt,
    reps: Optional[List[AlgInt]] = None,
) -> AlgInt:
    """The representative congruent to beta modulo alpha."""
    reps = quotient_reps(p, alpha) if reps is None else reps
    for r in reps:
        if _divides(p, alpha, nr_sub(p, beta, r)):
            return r
    raise PresentationError("no representative found; the list is incomplete")


def quotient_table(
    p: NumberRingPresentation, alpha: AlgInt, max_radius: Optional[int] = None
) -> Tuple[List[AlgInt], List[List[int]]]:
    """Representatives and the multiplication table of O/<alpha> on their indices."""
    reps = quotient_reps(p, alpha, max_radius)
    index: Dict[AlgInt, int] = {r: i for i, r in enumerate(reps)}
    table = [
        [index[reduce(p, alpha, nr_mul(p, u, v), reps)] for v in reps] for u in reps
    ]
    return reps, table


def nr_is_prime(
    p: NumberRingPresentation, alpha: AlgInt, max_radius: Optional[int] = None
) -> bool:
    """True iff O/<alpha> is a nonzero ring without zero divisors."""
    _check(p, alpha)
    if not any(alpha) or nr_is_unit(p, alpha):
        return False
    reps = quotient_reps(p, alpha, max_radius)
    nonzero = [r for r in reps if not _divides(p, alpha, r)]
    for i, u in enumerate(nonzero):
        for v in nonzero[i:]:
            if _divides(p, alpha, nr_mul(p, u, v)):
                logger.debug("zero divisor pair %s * %s", u, v)
                return False
    return True
