"""
Closed subsystems of a root system.

Two enumerations are provided. The brute-force oracle walks every symmetric
subset of the roots and keeps the addition-closed ones; it is exponential and
only used for small systems. The default enumeration iterates node deletions
on extended Dynkin diagrams (Borel-de Siebenthal), one irreducible component at
a time, and adds the standard parabolic subsystems and the empty system.

Roots are handled as indices into RootSystem.roots (positives first). A
precomputed reflection table maps (beta, gamma) to the index of s_beta(gamma),
so closures are pure table walks.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from src.rootdata import RootSystem, identify_cartan
from src.rootdata.cartan import connected_components, submatrix
from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import BudgetExceededError, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosedSubsystem:
    """
    A closed, symmetric subsystem of a root system.

    Attributes:
        positive: Indices (into rs.positive_roots) of the positive roots in the subsystem.
        base: Simple roots of the subsystem, as coefficient vectors over the ambient base.
        label: Type label, components joined by "x"; "empty" for the empty system.
        provenance: Steps that produced it, e.g. ("extended:4",) or ("bruteforce",).
    """

    positive: FrozenSet[int]
    base: Tuple[Tuple[int, ...], ...]
    label: str
    provenance: Tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return 2 * len(self.positive)

    @property
    def rank(self) -> int:
        return len(self.base)


class RootTables:
    """Index-level tables for one root system: sums, pairings and reflections."""

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        self.roots = rs.roots
        self.n_pos = len(rs.positive_roots)
        self.index: Dict[Tuple[int, ...], int] = {r: k for k, r in enumerate(self.roots)}

        R = np.array(self.roots, dtype=np.int64).reshape(len(self.roots), rs.rank)
        sym = np.array([[rs.root_lengths[i] * rs.cartan[i][j] for j in range(rs.rank)]
                        for i in range(rs.rank)], dtype=np.int64).reshape(rs.rank, rs.rank)
        gram = R @ sym @ R.T
        norms = np.diag(gram)
        # <beta^vee, gamma> = 2 (beta, gamma) / (beta, beta)
        self.pair = (2 * gram) // norms[:, None]
        self.reflect = np.empty_like(self.pair)
        for b in range(len(self.roots)):
            images = R - self.pair[b][:, None] * R[b][None, :]
            self.reflect[b] = [self.index[tuple(row)] for row in images.tolist()]
        self._reflect_rows: List[List[int]] = self.reflect.tolist()
        sums = (R[:, None, :] + R[None, :, :]).tolist()
        self._sums: List[List[int]] = [[self.index.get(tuple(v), -1) for v in row] for row in sums]
        logger.debug("root tables for %s: %d roots", rs.label, len(self.roots))

    def negative(self, k: int) -> int:
        return k + self.n_pos if k < self.n_pos else k - self.n_pos

    def sum_index(self, a: int, b: int) -> Optional[int]:
        s = self._sums[a][b]
        return None if s < 0 else s

    def closure(self, base: Sequence[int]) -> FrozenSet[int]:
        """Roots of the subsystem with the given simple roots: the W_S-orbit of +-S."""
        seen = set(base) | {self.negative(b) for b in base}
        frontier = list(seen)
        while frontier:
            nxt = []
            for g in frontier:
                for b in base:
                    image = self._reflect_rows[b][g]
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return frozenset(seen)

    def base_of(self, roots: FrozenSet[int]) -> List[int]:
        """Simple roots of a closed subsystem: positive members not a sum of two positive members."""
        positive = sorted(k for k in roots if k < self.n_pos)
        pos_set = set(positive)
        decomposable = set()
        for a, b in combinations(positive, 2):
            s = self.sum_index(a, b)
            if s is not None and s in pos_set:
                decomposable.add(s)
        return [k for k in positive if k not in decomposable]

    def cartan_of(self, base: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(self.pair[a][b]) for b in base) for a in base)


@lru_cache(maxsize=None)
def root_tables(rs: RootSystem) -> RootTables:
    return RootTables(rs)


@lru_cache(maxsize=None)
def _component_highest(cartan: Tuple[Tuple[int, ...], ...]) -> Tuple[int, ...]:
    return RootSystem.from_cartan(cartan, label="component").highest_root()


def _label(tables: RootTables, base: Sequence[int]) -> str:
    if not base:
        return "empty"
    cartan = tables.cartan_of(base)
    parts = []
    for component in connected_components(cartan):
        names = identify_cartan(submatrix(cartan, component))
        parts.append(names[0] if names else "?")
    return "x".join(sorted(parts))


def _make(tables: RootTables, roots: FrozenSet[int], provenance: Tuple[str, ...]) -> ClosedSubsystem:
    base = tables.base_of(roots)
    return ClosedSubsystem(
        positive=frozenset(k for k in roots if k < tables.n_pos),
        base=tuple(tables.roots[b] for b in base),
        label=_label(tables, base),
        provenance=provenance,
    )


def extended_deletions(tables: RootTables, base: Sequence[int]) -> List[Tuple[List[int], str]]:
    """
    One round of extended-diagram deletions on each component of a base.

    For every component the lowest root -theta is appended and each original
    node of that component is dropped in turn. Nodes with highest-root
    coefficient 1 give the same root set back and are skipped.
    """
    cartan = tables.cartan_of(base)
    results = []
    for component in connected_components(cartan):
        coeffs = _component_highest(submatrix(cartan, component))
        theta = [0] * tables.rs.rank
        for k, c in zip(component, coeffs):
            for m, x in enumerate(tables.roots[base[k]]):
                theta[m] += c * x
        lowest = tables.index[tuple(-x for x in theta)]
        for k, c in zip(component, coeffs):
            if c == 1:
                continue
            new_base = [b for j, b in enumerate(base) if j != k] + [lowest]
            results.append((new_base, f"extended:{tables.roots[base[k]]}"))
    return results


def closed_subsystems_bruteforce(rs: RootSystem,
                                 max_positive_roots: Optional[int] = None) -> List[ClosedSubsystem]:
    """
    Every closed symmetric subsystem, by exhaustive search.

    Args:
        rs: The root system.
        max_positive_roots: Refuse larger systems; defaults to
            SPRINGER_ORACLE_MAX_POSITIVE_ROOTS.

    Raises:
        BudgetExceededError: If rs has more positive roots than allowed.
    """
    limit = (max_positive_roots if max_positive_roots is not None
             else get_environment_manager().get_var_as_int("SPRINGER_ORACLE_MAX_POSITIVE_ROOTS", 12))
    tables = root_tables(rs)
    n = tables.n_pos
    if n > limit:
        raise BudgetExceededError(f"{rs.label} has {n} positive roots; oracle limit is {limit}")

    # A symmetric set is determined by its positive part; closure is checked on +-roots.
    sums = {}
    for a in range(len(tables.roots)):
        for b in range(a + 1, len(tables.roots)):
            s = tables.sum_index(a, b)
            if s is not None:
                sums.setdefault(a, []).append((b, s))

    found = []
    for mask in range(1 << n):
        members = set()
        for k in range(n):
            if mask >> k & 1:
                members.add(k)
                members.add(k + n)
        closed = all(b not in members or s in members
                     for a in members for b, s in sums.get(a, ()))
        if closed:
            found.append(_make(tables, frozenset(members), ("bruteforce",)))
    logger.debug("bruteforce oracle: %d closed subsystems in %s", len(found), rs.label)
    return found


def closed_subsystems(rs: RootSystem, method: str = "extended") -> List[ClosedSubsystem]:
    """
    Closed subsystems of rs.

    With method="extended" (the default) the list is built by iterated
    extended-diagram deletion plus parabolics, see below. method="bruteforce"
    runs the exhaustive oracle, and method="auto" picks the oracle whenever rs
    is within SPRINGER_ORACLE_MAX_POSITIVE_ROOTS.

    The list holds Phi itself, the empty system, every standard parabolic
    subsystem, and every subsystem reached by repeatedly deleting a node from
    the extended diagram of one component. Duplicates (equal root sets) are
    dropped; output is sorted largest first, then by label and root indices.
    """
    if method == "bruteforce":
        return closed_subsystems_bruteforce(rs)
    if method == "auto":
        limit = get_environment_manager().get_var_as_int("SPRINGER_ORACLE_MAX_POSITIVE_ROOTS", 12)
        if len(rs.positive_roots) <= limit:
            return closed_subsystems_bruteforce(rs, limit)
    elif method != "extended":
        raise InputError(f"unknown enumeration method {method!r}")

    tables = root_tables(rs)
    simple = [tables.index[rs.simple_root(i)] for i in range(rs.rank)]
    by_roots: Dict[FrozenSet[int], ClosedSubsystem] = {}

    full = tables.closure(simple)
    by_roots[full] = _make(tables, full, ("full",))
    stack = [(simple, ("full",))]
    while stack:
        base, provenance = stack.pop()
        for new_base, step in extended_deletions(tables, base):
            roots = tables.closure(new_base)
            if roots in by_roots:
                continue
            steps = provenance + (step,)
            by_roots[roots] = _make(tables, roots, steps)
            stack.append((tables.base_of(roots), steps))

    for size in range(rs.rank):
        for nodes in combinations(range(rs.rank), size):
            roots = tables.closure([simple[i] for i in nodes])
            if roots not in by_roots:
                step = f"parabolic:{[i + 1 for i in nodes]}" if nodes else "empty"
                by_roots[roots] = _make(tables, roots, (step,))

    result = sorted(by_roots.values(), key=lambda s: (-s.size, s.label, sorted(s.positive)))
    logger.debug("enumerated %d closed subsystems of %s", len(result), rs.label)
    return result


def is_closed(rs: RootSystem, subsystem: ClosedSubsystem) -> bool:
    """Check that the symmetric root set of a subsystem is closed under root addition."""
    tables = root_tables(rs)
    members = set(subsystem.positive) | {k + tables.n_pos for k in subsystem.positive}
    for a, b in combinations(sorted(members), 2):
        s = tables.sum_index(a, b)
        if s is not None and s not in members:
            return False
    return True


def subsystem_from_base(rs: RootSystem, base: Sequence[Sequence[int]],
                        provenance: Tuple[str, ...] = ()) -> ClosedSubsystem:
    """The subsystem generated by base, given as root coefficient vectors."""
    tables = root_tables(rs)
    return _make(tables, tables.closure([tables.index[tuple(b)] for b in base]), provenance)
