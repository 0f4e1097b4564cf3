"""
Root systems as integer coefficient vectors over a basis of simple roots.

All pairings come from the Cartan matrix; nothing is embedded in Euclidean
space. Positive roots are generated from the simple roots by closing under
simple reflections while staying positive.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel
from sympy import Matrix

from src.utilities.exceptions import InputError

from .cartan import (
    Cartan,
    canonical_cartan,
    connected_components,
    identify_cartan,
    parse_root_type,
    submatrix,
    type_label,
)

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]


class RootSystemModel(BaseModel):
    """JSON form of a root system."""

    family: str
    rank: int
    label: str
    cartan: List[List[int]]
    positive_roots: List[List[int]]
    highest_root: Optional[List[int]] = None


def _root_lengths(cartan: Cartan) -> Tuple[int, ...]:
    """
    Symmetrizing vector d with d_i·a_ij = d_j·a_ji.

    Each connected component is scaled so its shortest simple root has d = 1.
    """
    n = len(cartan)
    d: List[Optional[Fraction]] = [None] * n
    for component in connected_components(cartan):
        d[component[0]] = Fraction(1)
        stack = [component[0]]
        while stack:
            i = stack.pop()
            for j in component:
                if d[j] is None and cartan[i][j]:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
        smallest = min(d[j] for j in component)
        for j in component:
            d[j] = d[j] / smallest
        scale = lcm(*(d[j].denominator for j in component))
        for j in component:
            d[j] = d[j] * scale
    return tuple(int(x) for x in d)


def _generate_positive_roots(cartan: Cartan) -> Tuple[Root, ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        next_frontier = []
        for beta in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * beta[j] for j in range(n))
                if c >= 0:
                    continue
                image = tuple(b - c * int(i == j) for j, b in enumerate(beta))
                if image not in seen:
                    seen.add(image)
                    next_frontier.append(image)
        frontier = next_frontier
    return tuple(sorted(seen, key=lambda r: (sum(r), r)))


@dataclass(frozen=True)
class RootSystem:
    """
    A (possibly reducible) root system given by its Cartan matrix.

    Attributes:
        family: Family letter for irreducible systems, "" for reducible ones.
        rank: Number of simple roots.
        cartan: Cartan matrix, cartan[i][j] = <alpha_i^vee, alpha_j>.
        positive_roots: Positive roots as coefficient vectors, sorted by height.
        label: Type label such as "D4"; reducible systems join component labels with "x".
    """

    family: str
    rank: int
    cartan: Cartan
    positive_roots: Tuple[Root, ...]
    label: str
    _index: Dict[Root, int] = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_cartan(cls, cartan: Sequence[Sequence[int]], label: Optional[str] = None) -> "RootSystem":
        """
        Build the root system of an arbitrary Cartan matrix.

        Args:
            cartan: A (generalized) Cartan matrix of finite type.
            label: Optional label; identified from the matrix when omitted.
        """
        cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        if not cartan:
            return cls(family="", rank=0, cartan=(), positive_roots=(), label="empty")
        components = connected_components(cartan)
        if label is None:
            parts = []
            for component in components:
                names = identify_cartan(submatrix(cartan, component))
                parts.append(names[0] if names else "?")
            label = "x".join(parts)
        family = label[0] if len(components) == 1 and label[0].isalpha() else ""
        positive = _generate_positive_roots(cartan)
        rs = cls(family=family, rank=len(cartan), cartan=cartan, positive_roots=positive, label=label)
        rs._index.update({r: k for k, r in enumerate(positive)})
        logger.debug("built %s with %d positive roots", label, len(positive))
        return rs

    # -- basic data -------------------------------------------------------

    @property
    def is_irreducible(self) -> bool:
        return len(self.components()) == 1

    def components(self) -> List[List[int]]:
        return connected_components(self.cartan)

    @cached_property
    def roots(self) -> Tuple[Root, ...]:
        """Positive roots followed by their negatives."""
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    @cached_property
    def root_lengths(self) -> Tuple[int, ...]:
        """Symmetrizing vector d (half squared lengths of simple roots, up to scale)."""
        return _root_lengths(self.cartan)

    def simple_root(self, i: int) -> Root:
        return tuple(int(i == j) for j in range(self.rank))

    def index_of(self, root: Root) -> int:
        """Position of a positive root in positive_roots."""
        return self._index[tuple(root)]

    def is_root(self, vector: Sequence[int]) -> bool:
        v = tuple(vector)
        return v in self._index or tuple(-x for x in v) in self._index

    def pairing(self, i: int, beta: Sequence[int]) -> int:
        """<alpha_i^vee, beta> for beta in root coordinates."""
        return sum(self.cartan[i][j] * beta[j] for j in range(self.rank))

    def reflect(self, i: int, beta: Sequence[int]) -> Root:
        """Simple reflection s_i applied to a vector in root coordinates."""
        c = self.pairing(i, beta)
        return tuple(b - c * int(i == j) for j, b in enumerate(beta))

    def inner(self, beta: Sequence[int], gamma: Sequence[int]) -> int:
        """Invariant form with (alpha_i, alpha_j) = d_i·a_ij."""
        d = self.root_lengths
        return sum(beta[i] * gamma[j] * d[i] * self.cartan[i][j]
                   for i in range(self.rank) for j in range(self.rank))

    def half_norm(self, beta: Sequence[int]) -> int:
        """(beta, beta) / 2; equals d_i for the simple root alpha_i."""
        return self.inner(beta, beta) // 2

    def coroot_coefficients(self, beta: Sequence[int]) -> Root:
        """Coefficients of beta^vee over the simple coroots: p_m·d_m / d_beta."""
        d_beta = self.half_norm(beta)
        coeffs = []
        for m, p in enumerate(beta):
            value = Fraction(p * self.root_lengths[m], d_beta)
            if value.denominator != 1:
                raise InputError(f"{tuple(beta)} is not a root of {self.label}")
            coeffs.append(int(value))
        return tuple(coeffs)

    def coroot_pairing(self, beta: Sequence[int], weight: Sequence[int]) -> int:
        """<beta^vee, lambda> for lambda in fundamental-weight coordinates."""
        return sum(c * w for c, w in zip(self.coroot_coefficients(beta), weight))

    def dual(self) -> "RootSystem":
        """The coroot system (Cartan matrix transposed)."""
        transposed = tuple(zip(*self.cartan))
        return RootSystem.from_cartan(transposed)

    @cached_property
    def determinant(self) -> int:
        """det of the Cartan matrix, the index |P/Q|."""
        if not self.rank:
            return 1
        return int(Matrix(self.cartan).det())

    # -- highest root -----------------------------------------------------

    def highest_root(self) -> Root:
        """
        The unique positive root maximal in the coefficient order.

        Raises:
            InputError: If the system is reducible or empty.
        """
        if not self.rank or not self.is_irreducible:
            raise InputError(f"{self.label} has no unique highest root")
        top = self.positive_roots[-1]
        for root in self.positive_roots:
            if any(a > b for a, b in zip(root, top)):
                raise InputError(f"{self.label}: {top} is not maximal")
        return top

    def subsystem_cartan(self, nodes: Sequence[int]) -> Cartan:
        return submatrix(self.cartan, nodes)

    def to_model(self) -> RootSystemModel:
        highest = list(self.highest_root()) if self.rank and self.is_irreducible else None
        return RootSystemModel(
            family=self.family,
            rank=self.rank,
            label=self.label,
            cartan=[list(row) for row in self.cartan],
            positive_roots=[list(r) for r in self.positive_roots],
            highest_root=highest,
        )


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """
    Irreducible root system of type (family, rank).

    Raises:
        InvalidRootTypeError: For invalid pairs (A_n n>=1, B_n n>=2, C_n n>=3,
            D_n n>=4, E6-8, F4, G2 are valid).
    """
    family = family.upper()
    cartan = canonical_cartan(family, rank)
    return RootSystem.from_cartan(cartan, label=type_label(family, rank))


def root_system(label: str) -> RootSystem:
    """Root system from a label such as "E6"."""
    return build_root_system(*parse_root_type(label))


def highest_root_coeffs(rs: RootSystem) -> Root:
    """Coefficients (n_1, ..., n_r) of the highest root."""
    return rs.highest_root()


def dual_highest_root_coeffs(rs: RootSystem) -> Root:
    """n_i^vee = n_i·d_i / d_theta, the coefficients of the highest coroot-side root."""
    theta = rs.highest_root()
    d_theta = rs.half_norm(theta)
    return tuple(n * d // d_theta for n, d in zip(theta, rs.root_lengths))


CLASSICAL_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}
