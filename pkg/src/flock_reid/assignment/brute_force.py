"""Exhaustive O(n!) assignment oracle."""

from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import Union

import numpy as np
import structlog
from numpy.typing import ArrayLike

from ..errors import OracleSizeError
from ..settings import DEFAULT_ORACLE_CAP, ORACLE_CAP_CEILING
from .solver import Assignment, as_square_matrix

logger = structlog.get_logger()


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    table = np.array(list(permutations(range(n))), dtype=np.intp)
    table.setflags(write=False)
    return table


class Sense(str, Enum):
    """Optimization direction."""

    MIN = "min"
    MAX = "max"


def brute_force_assignment(
    matrix: ArrayLike,
    sense: Union[Sense, str] = Sense.MIN,
    cap: int = DEFAULT_ORACLE_CAP,
) -> Assignment:
    """
    Enumerate all n! permutations and return an optimum.

    Objective follows the solver conventions: total cost for MIN, mean
    similarity for MAX.

    Args:
        matrix: n x n matrix of finite values
        sense: "min" or "max"
        cap: largest order enumerated (n! rows are materialized)

    Raises:
        OracleSizeError: if the order exceeds `cap` or ORACLE_CAP_CEILING
    """
    sense = Sense(sense)
    values = as_square_matrix(matrix)
    n = values.shape[0]
    cap = min(cap, ORACLE_CAP_CEILING)
    if n > cap:
        raise OracleSizeError(f"Brute force refused: order {n} exceeds oracle cap {cap}")

    perms = _permutation_table(n)
    totals = values[np.arange(n), perms].sum(axis=1)
    best = int(np.argmin(totals)) if sense is Sense.MIN else int(np.argmax(totals))
    mapping = perms[best]

    # recompute along row order so objectives match the solver bit-for-bit on equal mappings
    total = float(values[np.arange(n), mapping].sum())
    objective = total if sense is Sense.MIN else total / n

    logger.debug("Brute force assignment", order=n, sense=sense.value, evaluated=len(perms))
    return Assignment(mapping=tuple(int(j) for j in mapping), objective=objective)
