"""
Weyl group data: orbits of weights, group orders and parabolic indices.

Group orders use |W| = f · r! · prod(n_i) per irreducible component, with f
the determinant of the Cartan matrix and n_i the highest-root coefficients.
The independent orbit-stabilizer recursion |W| = |W·omega_i| · |W_{omega_i}|
is available for cross-checking at small rank.
"""

import logging
from functools import lru_cache
from math import factorial, prod
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from sympy import factorint

from src.utilities.exceptions import InputError
from src.utilities.validation import validate_index

from .cartan import Cartan, connected_components, submatrix
from .system import RootSystem

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


def reflect_weight(cartan: Cartan, i: int, weight: Sequence[int]) -> Weight:
    """s_i(lambda) = lambda - lambda_i · alpha_i, with alpha_i = column i of the Cartan matrix."""
    c = weight[i]
    return tuple(w - c * cartan[k][i] for k, w in enumerate(weight))


def _orbit(cartan: Cartan, weight: Weight) -> Set[Weight]:
    seen = {weight}
    frontier = [weight]
    while frontier:
        next_frontier = []
        for lam in frontier:
            for i in range(len(cartan)):
                if lam[i] == 0:
                    continue
                image = reflect_weight(cartan, i, lam)
                if image not in seen:
                    seen.add(image)
                    next_frontier.append(image)
        frontier = next_frontier
    return seen


def weyl_orbit(rs: RootSystem, weight: Sequence[int]) -> FrozenSet[Weight]:
    """
    The W-orbit of a weight given in fundamental-weight coordinates.

    Args:
        rs: The root system.
        weight: Integer coordinates against omega_1..omega_r.

    Returns:
        The orbit as a frozenset of coordinate tuples.
    """
    if len(weight) != rs.rank:
        raise InputError(f"weight must have {rs.rank} coordinates")
    orbit = _orbit(rs.cartan, tuple(int(w) for w in weight))
    logger.debug("orbit of %s in %s has %d elements", tuple(weight), rs.label, len(orbit))
    return frozenset(orbit)


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    """omega_i for a 1-based index i."""
    validate_index(i, rs.rank)
    return tuple(int(k == i - 1) for k in range(rs.rank))


@lru_cache(maxsize=None)
def _irreducible_order(cartan: Cartan) -> int:
    rs = RootSystem.from_cartan(cartan, label="component")
    det = rs.determinant
    return det * factorial(rs.rank) * prod(rs.positive_roots[-1])


def cartan_weyl_order(cartan: Cartan) -> int:
    """|W| of any Cartan matrix, as a product over irreducible components."""
    if not cartan:
        return 1
    return prod(_irreducible_order(submatrix(cartan, c)) for c in connected_components(cartan))


def weyl_group_order(rs: RootSystem) -> int:
    """|W| via f · r! · prod(n_i) per component."""
    return cartan_weyl_order(rs.cartan)


def subdiagram_weyl_order(rs: RootSystem, nodes: Sequence[int]) -> int:
    """|W| of the sub-diagram on the given 0-based nodes (reducible allowed)."""
    return cartan_weyl_order(rs.subsystem_cartan(sorted(nodes)))


def weyl_group_order_by_orbits(cartan: Cartan) -> int:
    """
    |W| by the recursion |W| = |W·omega_1| · |W(diagram minus node 1)|.

    Orbits are enumerated explicitly, so this is only used for rank <= 6.
    """
    if not cartan:
        return 1
    total = 1
    for component in connected_components(cartan):
        sub = submatrix(cartan, component)
        omega = tuple(int(k == 0) for k in range(len(sub)))
        orbit_size = len(_orbit(sub, omega))
        rest = submatrix(sub, list(range(1, len(sub))))
        total *= orbit_size * weyl_group_order_by_orbits(rest)
    return total


def parabolic_index(rs: RootSystem, i: int) -> int:
    """
    |W / W_{omega_i}| for a 1-based simple-root index i.

    W_{omega_i} is the Weyl group of the diagram with node i deleted, so this
    also equals the size of the orbit of omega_i.
    """
    validate_index(i, rs.rank)
    others = [k for k in range(rs.rank) if k != i - 1]
    return weyl_group_order(rs) // subdiagram_weyl_order(rs, others)


def parabolic_indices(rs: RootSystem) -> List[int]:
    """parabolic_index for every node, in order."""
    return [parabolic_index(rs, i) for i in range(1, rs.rank + 1)]


def parabolic_index_table(rs: RootSystem) -> List[Dict[str, object]]:
    """
    Per-node coset counts |W / W_{omega_i}| with their prime factorizations.

    Returns:
        One row per node: {"node": i, "index": n, "factors": {prime: exponent}}.
    """
    rows = []
    for i, index in enumerate(parabolic_indices(rs), start=1):
        rows.append({"node": i, "index": index,
                     "factors": {int(p): int(e) for p, e in factorint(index).items()}})
    return rows
