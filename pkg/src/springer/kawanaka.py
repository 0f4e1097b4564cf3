"""
Weight filtrations of a cocharacter and the congruences a Springer map obeys on them.

For a dominant cocharacter lambda of the diagonal torus of SL_{n+1}, given by
integer exponents summing to zero, position (r, c) has weight
lambda_r - lambda_c. u(lambda, i) is spanned by the positions of weight >= i
and U(lambda, i) = 1 + u(lambda, i).
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.matrings.matrices import add_scalar, identity, inverse, mat_mul, mat_scale, mat_sub
from src.matrings.rings import FiniteRing, make_ring
from src.reporting import CheckRecord, CheckRecorder
from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import InputError

from .maps import SpringerCoefficients, springer_batch

logger = logging.getLogger(__name__)

EXHAUSTIVE_PAIRS = 1 << 16


@dataclass(frozen=True)
class KawanakaContext:
    """The filtration attached to a cocharacter."""

    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        weights = tuple(int(w) for w in self.weights)
        if len(weights) < 2:
            raise InputError("a cocharacter of SL_{n+1} needs at least two exponents")
        if sum(weights) != 0:
            raise InputError(f"cocharacter exponents must sum to 0, got {list(weights)}")
        if any(a < b for a, b in zip(weights, weights[1:])):
            raise InputError(f"cocharacter {list(weights)} is not dominant")
        object.__setattr__(self, "weights", weights)

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def max_weight(self) -> int:
        return self.weights[0] - self.weights[-1]

    def weight(self, r: int, c: int) -> int:
        return self.weights[r] - self.weights[c]

    def positions(self, i: int) -> List[Tuple[int, int]]:
        """Positions spanning u(lambda, i), for i >= 1."""
        i = max(i, 1)
        return [(r, c) for r in range(self.size) for c in range(self.size) if self.weight(r, c) >= i]

    def in_level(self, X: np.ndarray, i: int) -> np.ndarray:
        """Mask over the batch: X lies in u(lambda, i)."""
        allowed = np.zeros((self.size, self.size), dtype=bool)
        for r, c in self.positions(i):
            allowed[r, c] = True
        return ~np.any(np.where(allowed, 0, X), axis=(-2, -1))

    def subgroup(self, R: FiniteRing, i: int) -> np.ndarray:
        """Every element of U(lambda, i)(R)."""
        pos = self.positions(i)
        count = R.order ** len(pos)
        G = np.broadcast_to(identity(R, self.size), (count, self.size, self.size)).copy()
        for k, values in enumerate(product(range(R.order), repeat=len(pos))):
            for (r, c), v in zip(pos, values):
                G[k, r, c] = v
        return G

    def sample_subgroup(self, R: FiniteRing, i: int, count: int, rng: np.random.Generator) -> np.ndarray:
        pos = self.positions(i)
        G = np.broadcast_to(identity(R, self.size), (count, self.size, self.size)).copy()
        for r, c in pos:
            G[:, r, c] = rng.integers(0, R.order, size=count)
        return G


def _pairs(context: KawanakaContext, R: FiniteRing, m: int, n: int, samples: int,
           rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray, str]:
    sizes = [R.order ** len(context.positions(i)) for i in (m, n)]
    if sizes[0] * sizes[1] <= EXHAUSTIVE_PAIRS:
        U, V = context.subgroup(R, m), context.subgroup(R, n)
        iu, iv = np.meshgrid(np.arange(len(U)), np.arange(len(V)), indexing="ij")
        return U[iu.ravel()], V[iv.ravel()], "exhaustive"
    return context.sample_subgroup(R, m, samples, rng), context.sample_subgroup(R, n, samples, rng), "sampled"


def kawanaka_check(rec: CheckRecorder, coeffs: SpringerCoefficients, weights: Sequence[int], m: int, n: int,
                   samples: Optional[int] = None, seed: Optional[int] = None) -> bool:
    """
    For u in U(lambda, m) and v in U(lambda, n), with c = a_1^-1:
    rho(u) in u(lambda, m); rho(uv) - rho(u) - rho(v) in u(lambda, 2 min(m, n));
    rho([u, v]) - c [rho(u), rho(v)] in u(lambda, m + n + min(m, n)).

    Raises:
        InputError: For an invalid cocharacter or one of the wrong size.
    """
    env = get_environment_manager()
    samples = samples if samples is not None else env.get_var_as_int("SPRINGER_SAMPLES", 100)
    seed = seed if seed is not None else env.get_var_as_int("SPRINGER_SEED", 42)
    context = KawanakaContext(tuple(weights))
    if context.size != coeffs.size:
        raise InputError(f"cocharacter has {context.size} exponents, SL_{coeffs.size} needs {coeffs.size}")
    R = coeffs.ring
    c = int(R.inv(coeffs.coeffs[0]))
    U, V, mode = _pairs(context, R, m, n, samples, np.random.default_rng(seed))
    tag = f"{'_'.join(str(w) for w in context.weights)}.m{m}.n{n}.{R.name}"

    rho_u, rho_v = springer_batch(coeffs, U), springer_batch(coeffs, V)
    level = context.in_level(rho_u, m)

    additive = mat_sub(R, mat_sub(R, springer_batch(coeffs, mat_mul(R, U, V)), rho_u), rho_v)
    low = 2 * min(m, n)
    additive_ok = context.in_level(additive, low)

    U_inv, _ = inverse(R, U)
    V_inv, _ = inverse(R, V)
    commutator = mat_mul(R, mat_mul(R, U, V), mat_mul(R, U_inv, V_inv))
    bracket = mat_sub(R, mat_mul(R, rho_u, rho_v), mat_mul(R, rho_v, rho_u))
    defect = mat_sub(R, springer_batch(coeffs, commutator), mat_scale(R, c, bracket))
    high = m + n + min(m, n)
    bracket_ok = context.in_level(defect, high)

    ok = rec.record(f"kawanaka.level.{tag}", "rho(u) lies in u(lambda, m) for u in U(lambda, m)",
                    bool(level.all()), mode=mode, pairs=len(U))
    ok &= rec.record(f"kawanaka.additive.{tag}", "rho(uv) - rho(u) - rho(v) lies in u(lambda, 2 min(m, n))",
                     bool(additive_ok.all()), level=low, failures=int((~additive_ok).sum()))
    ok &= rec.record(f"kawanaka.bracket.{tag}", "rho([u, v]) - a_1^-1 [rho(u), rho(v)] lies in u(lambda, m + n + min(m, n))",
                     bool(bracket_ok.all()), level=high, c=R.format_element(c), failures=int((~bracket_ok).sum()))
    return ok


def differential_check(rec: CheckRecorder, coeffs: SpringerCoefficients) -> bool:
    """The differential of rho on strictly upper-triangular matrices is a_1 times the identity."""
    R = coeffs.ring
    symbol = next(s for s in ("e", "d", "t", "z") if s not in R.symbols)
    D = make_ring(f"{R.name}[{symbol}]/{symbol}^2")
    lifted = SpringerCoefficients(coeffs.n, D, coeffs.coeffs)
    eps = D.symbols[symbol]
    size = coeffs.size
    basis = [(r, c) for r in range(size) for c in range(r + 1, size)]
    E = np.zeros((len(basis), size, size), dtype=np.int64)
    for k, (r, c) in enumerate(basis):
        E[k, r, c] = eps
    images = springer_batch(lifted, add_scalar(D, E, D.one))
    expected = mat_scale(D, coeffs.coeffs[0], E)
    return rec.record(f"kawanaka.differential.{R.name}", "d rho on Lie U is a_1 times the identity",
                      bool(np.array_equal(images, expected)), ring=D.name, a1=R.format_element(coeffs.coeffs[0]))


def kawanaka_suite(samples: Optional[int] = None, seed: Optional[int] = None,
                   timings: bool = False) -> List[CheckRecord]:
    """lambda = (1, 0, -1) on SL3 over F2 and F3 with coefficients (1, 0) and (1, 1)."""
    rec = CheckRecorder("kawanaka", timings)
    for p in (2, 3):
        R = make_ring(f"F({p})")
        for tail in (R.zero, R.one):
            coeffs = SpringerCoefficients(2, R, (R.one, tail))
            for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
                kawanaka_check(rec, coeffs, (1, 0, -1), m, n, samples, seed)
            differential_check(rec, coeffs)
    logger.info("kawanaka suite: %d checks", len(rec.checks))
    return rec.checks
