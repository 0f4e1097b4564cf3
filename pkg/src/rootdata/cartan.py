"""
Canonical Cartan matrices in Bourbaki numbering.

Convention: cartan[i][j] = <alpha_i^vee, alpha_j>. In B_n the last simple root
is short, in C_n it is long; in E_n nodes 1-3-4-5-... form the chain and node 2
hangs off node 4; in F4 the double bond joins nodes 2 (long) and 3 (short); in
G2 node 1 is short.
"""

import itertools
import re
from typing import Dict, List, Optional, Sequence, Tuple

from src.utilities.exceptions import InvalidRootTypeError

Cartan = Tuple[Tuple[int, ...], ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")

# Labels that name the same Cartan matrix as a canonical type.
ALIASES: Dict[str, Tuple[str, ...]] = {
    "A1": ("B1", "C1"),
    "B2": ("C2",),
    "A3": ("D3",),
}


def is_valid_type(family: str, rank: int) -> bool:
    """True for A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E6-8, F4, G2."""
    return (
        (family == "A" and rank >= 1)
        or (family == "B" and rank >= 2)
        or (family == "C" and rank >= 3)
        or (family == "D" and rank >= 4)
        or (family == "E" and rank in (6, 7, 8))
        or (family == "F" and rank == 4)
        or (family == "G" and rank == 2)
    )


def parse_root_type(label: str) -> Tuple[str, int]:
    """
    Parse a label such as "E6" or "a5".

    Raises:
        InvalidRootTypeError: If the label is malformed or not a valid type.
    """
    match = _TYPE_RE.match(label or "")
    if not match:
        raise InvalidRootTypeError(f"cannot parse root system type {label!r}")
    family, rank = match.group(1).upper(), int(match.group(2))
    if not is_valid_type(family, rank):
        raise InvalidRootTypeError(f"{family}{rank} is not a valid irreducible type")
    return family, rank


def _chain(rank: int) -> List[List[int]]:
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
        if i + 1 < rank:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _link(a: List[List[int]], i: int, j: int) -> None:
    a[i][j] = a[j][i] = -1


def canonical_cartan(family: str, rank: int) -> Cartan:
    """
    Cartan matrix of an irreducible type.

    Raises:
        InvalidRootTypeError: If (family, rank) is not a valid type.
    """
    if not is_valid_type(family, rank):
        raise InvalidRootTypeError(f"{family}{rank} is not a valid irreducible type")

    if family == "A":
        a = _chain(rank)
    elif family == "B":
        a = _chain(rank)
        a[rank - 1][rank - 2] = -2
    elif family == "C":
        a = _chain(rank)
        a[rank - 2][rank - 1] = -2
    elif family == "D":
        a = _chain(rank)
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        _link(a, rank - 3, rank - 1)
    elif family == "E":
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        _link(a, 0, 2)
        _link(a, 1, 3)
        for i in range(2, rank - 1):
            _link(a, i, i + 1)
    elif family == "F":
        a = _chain(4)
        a[2][1] = -2
    else:
        a = [[2, -3], [-1, 2]]
    return tuple(tuple(row) for row in a)


def type_label(family: str, rank: int) -> str:
    return f"{family}{rank}"


def candidate_types(rank: int) -> List[Tuple[str, int]]:
    """All valid irreducible types of a given rank."""
    return [(f, rank) for f in FAMILIES if is_valid_type(f, rank)]


def find_isomorphism(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """
    Search for a permutation pi with a[i][j] == b[pi[i]][pi[j]].

    Backtracking over node assignments, pruning on diagonal-free row
    signatures and on every already-assigned pair.

    Returns:
        The permutation as a list, or None if the matrices are not conjugate.
    """
    n = len(a)
    if n != len(b):
        return None

    def signature(m: Sequence[Sequence[int]], i: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (tuple(sorted(m[i][j] for j in range(n) if j != i)),
                tuple(sorted(m[j][i] for j in range(n) if j != i)))

    sig_a = [signature(a, i) for i in range(n)]
    sig_b = [signature(b, i) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None

    assignment: List[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for k in range(n):
            if used[k] or sig_a[i] != sig_b[k] or a[i][i] != b[k][k]:
                continue
            if all(a[i][j] == b[k][assignment[j]] and a[j][i] == b[assignment[j]][k] for j in range(i)):
                used[k] = True
                assignment.append(k)
                if extend(i + 1):
                    return True
                assignment.pop()
                used[k] = False
        return False

    return list(assignment) if extend(0) else None


def identify_cartan(cartan: Sequence[Sequence[int]]) -> List[str]:
    """
    Labels of all irreducible types whose Cartan matrix is conjugate to cartan.

    Aliases (B2 = C2, A1 = B1 = C1, A3 = D3) are included so callers can match
    either name. Returns an empty list for reducible or unknown matrices.
    """
    rank = len(cartan)
    labels: List[str] = []
    for family, r in candidate_types(rank):
        if find_isomorphism(cartan, canonical_cartan(family, r)) is not None:
            label = type_label(family, r)
            labels.append(label)
            labels.extend(ALIASES.get(label, ()))
    return labels


def connected_components(cartan: Sequence[Sequence[int]],
                         nodes: Optional[Sequence[int]] = None) -> List[List[int]]:
    """Connected components of the Dynkin graph restricted to nodes, each sorted."""
    nodes = list(range(len(cartan))) if nodes is None else sorted(nodes)
    remaining = set(nodes)
    components: List[List[int]] = []
    for start in nodes:
        if start not in remaining:
            continue
        stack, component = [start], []
        remaining.discard(start)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in list(remaining):
                if cartan[i][j] or cartan[j][i]:
                    remaining.discard(j)
                    stack.append(j)
        components.append(sorted(component))
    return components


def submatrix(cartan: Sequence[Sequence[int]], nodes: Sequence[int]) -> Cartan:
    return tuple(tuple(cartan[i][j] for j in nodes) for i in nodes)


def all_canonical_labels(max_rank: int = 8) -> List[str]:
    """Every valid type label up to max_rank, in family order."""
    return [type_label(f, r) for f, r in itertools.chain.from_iterable(
        candidate_types(r) for r in range(1, max_rank + 1))]
