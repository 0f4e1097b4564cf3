"""
Folding a root system along a group of diagram automorphisms.

The folded simple roots are the orbit images of the simple roots. The folded
Cartan entry for orbits (O, P) pairs the orbit-sum coroot of O with the image
of one simple root of P. When an orbit contains two linked nodes (type A_{2m}
with its flip) the folded coroot is twice the orbit sum, and the map from the
torus of the original group to the fixed torus has a kernel of order 2.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from src.utilities.exceptions import AutomorphismError

from .cartan import Cartan, identify_cartan
from .system import Root, RootSystem, build_root_system

logger = logging.getLogger(__name__)

CHAR2_CAVEAT = (
    "fixed points of an order-2 automorphism of type A_2m are not smooth in "
    "characteristic 2; the folded data is combinatorial only"
)


@dataclass(frozen=True)
class DiagramAutomorphism:
    """
    A permutation of simple-root indices preserving the Cartan matrix.

    Attributes:
        permutation: 0-based images, permutation[i] = sigma(i).
        name: Short name used by the CLI.
    """

    permutation: Tuple[int, ...]
    name: str = "custom"

    @property
    def order(self) -> int:
        k, current = 1, self.permutation
        identity = tuple(range(len(self.permutation)))
        while current != identity:
            current = tuple(self.permutation[i] for i in current)
            k += 1
        return k

    def validate(self, rs: RootSystem) -> "DiagramAutomorphism":
        """
        Check the permutation against rs.

        Raises:
            AutomorphismError: If it is not a permutation of the right size or
                does not preserve the Cartan matrix.
        """
        perm = self.permutation
        if sorted(perm) != list(range(rs.rank)):
            raise AutomorphismError(f"{perm} is not a permutation of {rs.rank} nodes")
        c = rs.cartan
        for i in range(rs.rank):
            for j in range(rs.rank):
                if c[perm[i]][perm[j]] != c[i][j]:
                    raise AutomorphismError(
                        f"permutation {self.one_based()} does not preserve the Cartan matrix of {rs.label}"
                    )
        return self

    def one_based(self) -> List[int]:
        return [p + 1 for p in self.permutation]


def named_automorphisms(rs: RootSystem, name: str) -> List[DiagramAutomorphism]:
    """
    Generators for a named automorphism group of rs.

    Names: "id"; "flip" (A_n, D_n, E6); "rot3", "lambda", "mu", "s3" (D4).
    The D4 maps follow the labelling with alpha_2 at the branch point:
    lambda fixes alpha_1 and swaps alpha_3, alpha_4; rot3 = mu sends
    alpha_1 -> alpha_3 -> alpha_4 -> alpha_1.

    Raises:
        AutomorphismError: For an unknown name or a name not available for rs.
    """
    n = rs.rank
    key = name.lower()
    if key in ("id", "identity"):
        return [DiagramAutomorphism(tuple(range(n)), "id")]
    if key == "flip":
        if rs.label.startswith("A"):
            return [DiagramAutomorphism(tuple(n - 1 - i for i in range(n)), "flip").validate(rs)]
        if rs.label.startswith("D"):
            perm = list(range(n))
            perm[n - 2], perm[n - 1] = n - 1, n - 2
            return [DiagramAutomorphism(tuple(perm), "flip").validate(rs)]
        if rs.label == "E6":
            return [DiagramAutomorphism((5, 1, 4, 3, 2, 0), "flip").validate(rs)]
    if rs.label == "D4":
        d4 = {
            "lambda": (0, 1, 3, 2),
            "rot3": (2, 1, 3, 0),
            "mu": (2, 1, 3, 0),
        }
        if key in d4:
            return [DiagramAutomorphism(d4[key], key).validate(rs)]
        if key == "s3":
            return [DiagramAutomorphism(d4["lambda"], "lambda").validate(rs),
                    DiagramAutomorphism(d4["mu"], "mu").validate(rs)]
    raise AutomorphismError(f"no automorphism named {name!r} for {rs.label}")


def orbits_of(generators: Sequence[DiagramAutomorphism], rank: int) -> List[List[int]]:
    """Orbits of the group generated by the permutations, sorted by least element."""
    parent = list(range(rank))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for auto in generators:
        for i, j in enumerate(auto.permutation):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: Dict[int, List[int]] = {}
    for i in range(rank):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda orbit: orbit[0])


class FoldResult(BaseModel):
    """Outcome of folding; orbits are reported 1-based."""

    source: str
    automorphisms: List[str]
    orbits: List[List[int]]
    folded_cartan: List[List[int]]
    folded_type: str
    isomorphic_labels: List[str]
    image_roots: List[List[int]]
    folded_positive_roots: List[List[int]]
    doubled_orbits: List[List[int]]
    kernel_order: int
    images_match: bool
    caveat: Optional[str] = None


def _orbit_image(beta: Sequence[int], orbits: Sequence[Sequence[int]]) -> Root:
    return tuple(sum(beta[i] for i in orbit) for orbit in orbits)


def fold(rs: RootSystem, autos: Sequence[DiagramAutomorphism]) -> FoldResult:
    """
    Fold rs along the group generated by autos.

    Every generator is validated first. The folded system is built from the
    folded Cartan matrix and compared with the deduplicated orbit images of
    the positive roots: the images must be the folded positive roots, plus
    (only when an orbit is doubled) twice some of them.

    Raises:
        AutomorphismError: If a generator does not preserve the Cartan matrix.
    """
    for auto in autos:
        auto.validate(rs)
    orbits = orbits_of(autos, rs.rank)
    c = rs.cartan

    doubled = [orbit for orbit in orbits
               if any(c[i][j] for i in orbit for j in orbit if i != j)]
    folded: List[List[int]] = []
    for orbit in orbits:
        factor = 2 if orbit in doubled else 1
        row = []
        for target in orbits:
            j = target[0]
            row.append(factor * sum(c[i][j] for i in orbit))
        folded.append(row)
    folded_cartan: Cartan = tuple(tuple(row) for row in folded)

    labels = identify_cartan(folded_cartan)
    folded_rs = RootSystem.from_cartan(folded_cartan, label=labels[0] if labels else None)

    images = sorted({_orbit_image(beta, orbits) for beta in rs.positive_roots},
                    key=lambda r: (sum(r), r))
    folded_positive = set(folded_rs.positive_roots)
    extras = [img for img in images if img not in folded_positive]
    images_match = folded_positive.issubset(images) and all(
        all(x % 2 == 0 for x in img) and tuple(x // 2 for x in img) in folded_positive
        for img in extras
    ) and (bool(doubled) or not extras)

    logger.debug("folded %s along %s: orbits %s -> %s", rs.label,
                 [a.name for a in autos], orbits, labels)
    return FoldResult(
        source=rs.label,
        automorphisms=[a.name for a in autos],
        orbits=[[i + 1 for i in orbit] for orbit in orbits],
        folded_cartan=[list(row) for row in folded_cartan],
        folded_type=labels[0] if labels else folded_rs.label,
        isomorphic_labels=labels,
        image_roots=[list(r) for r in images],
        folded_positive_roots=[list(r) for r in folded_rs.positive_roots],
        doubled_orbits=[[i + 1 for i in orbit] for orbit in doubled],
        kernel_order=2 if doubled else 1,
        images_match=images_match,
        caveat=CHAR2_CAVEAT if doubled else None,
    )


def type_a_fold_root_strings(m: int) -> Tuple[bool, List[List[int]], List[List[int]]]:
    """
    Compare the folded images of A_{2m+1} with the two root-string shapes.

    Shapes, in orbit coordinates e_1..e_{m+1}:
      e_i + ... + e_j                        (1 <= i <= j <= m+1)
      (e_i + ... + e_{m+1}) + (e_j + ... + e_m)  (1 <= i <= m+1, 1 <= j <= m)

    Returns:
        (every image has a shape and every shape is an image, images, shapes)
    """
    rs = build_root_system("A", 2 * m + 1)
    result = fold(rs, named_automorphisms(rs, "flip"))
    size = m + 1

    def interval(i: int, j: int) -> List[int]:
        return [int(i <= k <= j) for k in range(1, size + 1)]

    shapes = set()
    for i in range(1, size + 1):
        for j in range(i, size + 1):
            shapes.add(tuple(interval(i, j)))
    for i in range(1, size + 1):
        for j in range(1, m + 1):
            shapes.add(tuple(a + b for a, b in zip(interval(i, size), interval(j, m))))
    images = {tuple(r) for r in result.image_roots}
    ordered = sorted(shapes, key=lambda r: (sum(r), r))
    return images == shapes, result.image_roots, [list(s) for s in ordered]
