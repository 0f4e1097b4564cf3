"""
Lie U for D4 over a coefficient field in which 2 is invertible.

Vectors are coordinate tuples over POSITIVE_ROOTS with entries in a sympy
domain (QQ, or GF(p) for odd p). Linear maps are 12x12 row lists over the
same domain, column j holding the image of X_j.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

from sympy.polys.domains import GF, QQ

from src.matrings.linalg import nullspace, rank_over
from src.rootdata import build_root_system
from src.rootdata.folding import named_automorphisms
from src.utilities.exceptions import CoefficientError, InputError, StructureConstantError
from src.utilities.validation import validate_prime

from .table import A1, A2, A3, A4, HIGHEST, POSITIVE_ROOTS, RELATIONS, Root, d4_structure_constants, root_label

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Matrix = List[List[Any]]
Word = Tuple[Tuple[Root, Scalar], ...]

DIM = len(POSITIVE_ROOTS)
TRIALITY_NAMES = ("lambda", "mu")


def coefficient_field(p: int = 0):
    """
    QQ for p = 0, GF(p) for an odd prime p.

    Raises:
        CoefficientError: For p = 2, where 2 is not invertible.
    """
    if p == 0:
        return QQ
    validate_prime(p, "coefficient characteristic")
    if p == 2:
        raise CoefficientError("2 must be invertible in the coefficient field")
    return GF(p)


def scalar(K, value: Scalar):
    """A rational number as an element of K."""
    value = Fraction(value)
    return K.convert(value.numerator) / K.convert(value.denominator)


def to_fraction(K, x) -> Fraction:
    """Rational value of a QQ element, or the least non-negative residue in GF(p)."""
    value = K.to_sympy(x)
    if K.is_FiniteField:
        return Fraction(int(value) % K.mod)
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class LieUVector:
    """An element sum c_alpha X_alpha of Lie U."""

    domain: Any
    coeffs: Tuple[Any, ...]

    @classmethod
    def zero(cls, K) -> "LieUVector":
        return cls(K, tuple(K.zero for _ in range(DIM)))

    @classmethod
    def root_vector(cls, K, alpha: Root) -> "LieUVector":
        i = POSITIVE_ROOTS.index(tuple(alpha))
        return cls(K, tuple(K.one if j == i else K.zero for j in range(DIM)))

    @classmethod
    def from_terms(cls, K, terms: Mapping[Root, Scalar]) -> "LieUVector":
        coeffs = [K.zero] * DIM
        for alpha, c in terms.items():
            coeffs[POSITIVE_ROOTS.index(tuple(alpha))] += scalar(K, c)
        return cls(K, tuple(coeffs))

    def _check(self, other: "LieUVector") -> None:
        if self.domain != other.domain:
            raise InputError(f"coefficient fields differ: {self.domain} and {other.domain}")

    def __add__(self, other: "LieUVector") -> "LieUVector":
        self._check(other)
        return LieUVector(self.domain, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LieUVector") -> "LieUVector":
        self._check(other)
        return LieUVector(self.domain, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LieUVector":
        return LieUVector(self.domain, tuple(-a for a in self.coeffs))

    def scale(self, c: Any) -> "LieUVector":
        c = scalar(self.domain, c) if isinstance(c, (int, Fraction)) else c
        return LieUVector(self.domain, tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == self.domain.zero for a in self.coeffs)

    def bracket(self, other: "LieUVector") -> "LieUVector":
        return ad_bracket(self, other)

    def terms(self) -> Dict[str, str]:
        """Non-zero coefficients keyed by root name."""
        return {root_label(alpha): str(to_fraction(self.domain, c))
                for alpha, c in zip(POSITIVE_ROOTS, self.coeffs) if c != self.domain.zero}


def ad_bracket(X: LieUVector, Y: LieUVector) -> LieUVector:
    """
    [X, Y], extended bilinearly from [X_alpha, X_beta] = N X_{alpha+beta}.

    Raises:
        InputError: If X and Y live over different coefficient fields.
    """
    X._check(Y)
    K = X.domain
    table = d4_structure_constants()
    out = [K.zero] * DIM
    for i, a in enumerate(X.coeffs):
        if a == K.zero:
            continue
        for j, b in enumerate(Y.coeffs):
            entry = table.bracket_index(i, j)
            if entry is None or b == K.zero:
                continue
            k, n = entry
            out[k] += K.convert(n) * a * b
    return LieUVector(K, tuple(out))


# -- matrices -----------------------------------------------------------------

def identity_matrix(K) -> Matrix:
    return [[K.one if i == j else K.zero for j in range(DIM)] for i in range(DIM)]


def matmul(K, A: Matrix, B: Matrix) -> Matrix:
    n, m, inner = len(A), len(B[0]), len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = K.zero
            for k in range(inner):
                acc += A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def matsub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def apply(M: Matrix, v: LieUVector) -> LieUVector:
    K = v.domain
    out = []
    for row in M:
        acc = K.zero
        for a, b in zip(row, v.coeffs):
            acc += a * b
        out.append(acc)
    return LieUVector(K, tuple(out))


def from_columns(K, columns: Sequence[LieUVector]) -> Matrix:
    return [[columns[j].coeffs[i] for j in range(len(columns))] for i in range(DIM)]


def is_zero_matrix(K, M: Matrix) -> bool:
    return all(x == K.zero for row in M for x in row)


def ad_matrix(K, alpha: Root) -> Matrix:
    """ad X_alpha as a 12x12 matrix."""
    X = LieUVector.root_vector(K, alpha)
    return from_columns(K, [ad_bracket(X, LieUVector.root_vector(K, beta)) for beta in POSITIVE_ROOTS])


def root_group_matrix(K, alpha: Root, t: Any) -> Matrix:
    """Ad(x_alpha(t)) = 1 + t ad X_alpha on Lie U."""
    t = scalar(K, t) if isinstance(t, (int, Fraction)) else t
    ad = ad_matrix(K, alpha)
    return [[(K.one if i == j else K.zero) + t * ad[i][j] for j in range(DIM)] for i in range(DIM)]


def ad_u_matrix(K, word: Sequence[Tuple[Root, Any]]) -> Matrix:
    """Ad of a product of root-group elements, leftmost factor applied last."""
    M = identity_matrix(K)
    for alpha, t in word:
        M = matmul(K, M, root_group_matrix(K, alpha, t))
    return M


def ad_u_action(u_word: Sequence[Tuple[Root, Any]], Y: LieUVector) -> LieUVector:
    """Ad(u) Y for u given as a word of (root, parameter) pairs."""
    K = Y.domain
    for alpha, t in reversed(list(u_word)):
        t = scalar(K, t) if isinstance(t, (int, Fraction)) else t
        Y = Y + ad_bracket(LieUVector.root_vector(K, alpha), Y).scale(t)
    return Y


def ad_square_vanishes(K) -> bool:
    """(ad X_alpha)^2 X_beta = 0 for all alpha != beta."""
    for alpha in POSITIVE_ROOTS:
        X = LieUVector.root_vector(K, alpha)
        for beta in POSITIVE_ROOTS:
            if beta != alpha and not ad_bracket(X, ad_bracket(X, LieUVector.root_vector(K, beta))).is_zero():
                return False
    return True


def jacobi_failures(K) -> List[Tuple[str, str, str]]:
    """Basis triples for which the Jacobi identity fails."""
    basis = [LieUVector.root_vector(K, alpha) for alpha in POSITIVE_ROOTS]
    failures = []
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            for k, z in enumerate(basis):
                total = (ad_bracket(x, ad_bracket(y, z)) + ad_bracket(y, ad_bracket(z, x))
                         + ad_bracket(z, ad_bracket(x, y)))
                if not total.is_zero():
                    failures.append((root_label(POSITIVE_ROOTS[i]), root_label(POSITIVE_ROOTS[j]),
                                     root_label(POSITIVE_ROOTS[k])))
    return failures


def nilpotency_degree(K, M: Matrix) -> int:
    """Least k <= DIM with (M - 1)^k = 0, or 0 if there is none."""
    N = matsub(M, identity_matrix(K))
    power = N
    for k in range(1, DIM + 1):
        if is_zero_matrix(K, power):
            return k
        power = matmul(K, power, N)
    return 0


# -- the regular unipotent and its fixed space -------------------------------

def regular_u() -> Word:
    """u = x_a1(1) x_a3(1) x_a4(1) x_a2(1)."""
    return ((A1, 1), (A3, 1), (A4, 1), (A2, 1))


def e_basis(K) -> List[LieUVector]:
    """The explicit basis E1..E4 of the fixed space of Ad(u)."""
    half = Fraction(1, 2)
    e1 = LieUVector.from_terms(K, {
        A1: 1, A3: 1, A4: 1, A2: 1,
        (1, 1, 0, 0): half, (0, 1, 1, 0): -half, (0, 1, 0, 1): -half, (0, 1, 1, 1): -half,
    })
    e2 = LieUVector.from_terms(K, {(1, 1, 1, 0): 1, (0, 1, 1, 1): -1})
    e3 = LieUVector.from_terms(K, {(1, 1, 0, 1): 1, (0, 1, 1, 1): -1})
    e4 = LieUVector.root_vector(K, HIGHEST)
    return [e1, e2, e3, e4]


def fixed_space_basis(K) -> List[LieUVector]:
    """
    A basis of ker(Ad(u) - 1) on Lie U.

    Raises:
        StructureConstantError: If the kernel is not 4-dimensional or its span
            differs from that of E1..E4.
    """
    M = matsub(ad_u_matrix(K, regular_u()), identity_matrix(K))
    kernel = nullspace(M, DIM, K)
    basis = [LieUVector(K, tuple(K.convert(x) for x in v)) for v in kernel]
    logger.debug("fixed space of Ad(u) over %s has dimension %d", K, len(basis))
    if len(basis) != 4:
        raise StructureConstantError(f"fixed space of Ad(u) over {K} has dimension {len(basis)}, not 4")
    E = e_basis(K)
    if rank_over([list(v.coeffs) for v in basis + E], DIM, K) != 4:
        raise StructureConstantError(f"fixed space of Ad(u) over {K} is not spanned by E1..E4")
    return basis


def e_coordinates(v: LieUVector) -> List[Any]:
    """
    Coordinates of v in the basis E1..E4.

    E1..E4 have leading entries at a1, a1+a2+a3, a1+a2+a4 and the highest root,
    where the others vanish, so coordinates are read off there.

    Raises:
        InputError: If v is not in the span of E1..E4.
    """
    K = v.domain
    E = e_basis(K)
    pivots = [POSITIVE_ROOTS.index(r) for r in (A1, (1, 1, 1, 0), (1, 1, 0, 1), HIGHEST)]
    coords = [v.coeffs[i] for i in pivots]
    rebuilt = LieUVector.zero(K)
    for c, e in zip(coords, E):
        rebuilt = rebuilt + e.scale(c)
    if rebuilt != v:
        raise InputError("vector is not in the span of E1..E4")
    return coords


# -- triality -----------------------------------------------------------------

def _bracket_expressions() -> Dict[Root, Tuple[Root, Root]]:
    """For each non-simple root, the first listed relation producing it."""
    expressions: Dict[Root, Tuple[Root, Root]] = {}
    for alpha, beta in RELATIONS:
        total = tuple(a + b for a, b in zip(alpha, beta))
        expressions.setdefault(total, (alpha, beta))  # type: ignore[arg-type]
    return expressions


def _simple_permutation(name: str) -> Dict[Root, Root]:
    auto = named_automorphisms(build_root_system("D", 4), name)[0]
    simple = (A1, A2, A3, A4)
    return {simple[i]: simple[j] for i, j in enumerate(auto.permutation)}


@lru_cache(maxsize=None)
def _triality_columns(K, name: str) -> Tuple[LieUVector, ...]:
    if name not in TRIALITY_NAMES:
        raise InputError(f"unknown triality automorphism {name!r}; use one of {', '.join(TRIALITY_NAMES)}")
    images: Dict[Root, LieUVector] = {
        alpha: LieUVector.root_vector(K, beta) for alpha, beta in _simple_permutation(name).items()
    }
    expressions = _bracket_expressions()
    for gamma in POSITIVE_ROOTS:
        if gamma in images:
            continue
        alpha, beta = expressions[gamma]
        images[gamma] = ad_bracket(images[alpha], images[beta])

    table = d4_structure_constants()
    for (i, j), (k, n) in table.constants.items():
        lhs = images[POSITIVE_ROOTS[k]].scale(n)
        rhs = ad_bracket(images[POSITIVE_ROOTS[i]], images[POSITIVE_ROOTS[j]])
        if lhs != rhs:
            raise StructureConstantError(
                f"{name} is not compatible with [{root_label(POSITIVE_ROOTS[i])}, {root_label(POSITIVE_ROOTS[j])}]")
    return tuple(images[alpha] for alpha in POSITIVE_ROOTS)


def triality_matrix(K, name: str) -> Matrix:
    """
    The pinned automorphism lambda or mu of Lie U as a 12x12 matrix.

    Simple root vectors are permuted; every other root vector goes through its
    bracket expression in simple ones.

    Raises:
        InputError: For an unknown name.
        StructureConstantError: If the extension does not respect the bracket.
    """
    return from_columns(K, list(_triality_columns(K, name)))


def triality_action(auto: str, v: LieUVector) -> LieUVector:
    return apply(triality_matrix(v.domain, auto), v)


def triality_on_e(K, name: str) -> Matrix:
    """4x4 matrix M with phi(E_j) = sum_i M[i][j] E_i."""
    columns = [e_coordinates(triality_action(name, e)) for e in e_basis(K)]
    return [[columns[j][i] for j in range(4)] for i in range(4)]


EXPECTED_TRIALITY_ON_E: Dict[str, List[List[Fraction]]] = {
    # columns: images of E1..E4
    "lambda": [
        [Fraction(1), Fraction(0), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
    ],
    "mu": [
        [Fraction(1), Fraction(0), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(-1, 2), Fraction(-1), Fraction(-1), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
    ],
}


def expected_triality_on_e(K, name: str) -> Matrix:
    return [[scalar(K, x) for x in row] for row in EXPECTED_TRIALITY_ON_E[name]]
