"""
Finite commutative rings as F_p-algebras with lookup-table arithmetic.

Every ring is stored as a structure-constant tensor C over F_p: for the F_p
basis e_1..e_d, e_i·e_j = sum_k C[i, j, k] e_k. Elements are integer codes,
the base-p digits of their coordinates (coordinate i is digit i). Addition,
multiplication, negation and inversion are precomputed as numpy tables, so
all matrix arithmetic further up reduces to fancy indexing.

Rings are built from specs:

    ring    := term ('x' term)*
    term    := atom suffix*
    atom    := 'F(' p [',' k] ')' | '(' ring ')'
    suffix  := '[' s ']/' s '^' m

F(p, k) uses the first monic irreducible polynomial of degree k in
lexicographic coefficient order; its generator is the symbol x. A suffix
adjoins s with s^m = 0 ("[e]/e^2" gives dual numbers).
"""

import logging
import re
from functools import cached_property, lru_cache
from itertools import product as iter_product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import RingSpecError, StructureConstantError
from src.utilities.validation import validate_prime

logger = logging.getLogger(__name__)

_CHUNK = 64


class FiniteRing:
    """
    A finite commutative F_p-algebra with table arithmetic.

    Attributes:
        p: The characteristic.
        dim: Dimension over F_p; the ring has p**dim elements.
        structure: Structure constants, shape (dim, dim, dim), entries mod p.
        name: The spec string the ring was built from.
        field_degree: k for a local ring built over F(p, k); None for products.
        parts: The two factors of a binary product, else None.
        symbols: Adjoined generators by name, as element codes.
    """

    def __init__(self, p: int, structure: np.ndarray, one: Sequence[int], name: str,
                 field_degree: Optional[int] = None,
                 parts: Optional[Tuple["FiniteRing", "FiniteRing"]] = None,
                 symbols: Optional[Dict[str, int]] = None,
                 field_frobenius: Optional[np.ndarray] = None,
                 max_order: Optional[int] = None) -> None:
        self.p = p
        self.structure = np.asarray(structure, dtype=np.int64) % p
        self.dim = self.structure.shape[0]
        self.order = p ** self.dim
        self.name = name
        self.field_degree = field_degree
        self.parts = parts
        self.symbols = dict(symbols or {})
        self._one_coords = np.asarray(one, dtype=np.int64)
        self._field_frobenius = field_frobenius

        limit = (max_order if max_order is not None
                 else get_environment_manager().get_var_as_int("SPRINGER_MAX_RING_ORDER", 1024))
        if self.order > limit:
            raise RingSpecError(
                f"ring {name} has {self.order} elements; table arithmetic is limited to {limit}"
            )
        self._powers = p ** np.arange(self.dim, dtype=np.int64)
        logger.debug("ring %s: p=%d, dim=%d, order=%d", name, p, self.dim, self.order)

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r})"

    # -- encoding ---------------------------------------------------------

    def encode(self, coords: np.ndarray) -> np.ndarray:
        """Codes of coordinate vectors (last axis = coordinates)."""
        return (np.asarray(coords, dtype=np.int64) % self.p) @ self._powers

    @cached_property
    def coords(self) -> np.ndarray:
        """Coordinates of every element, shape (order, dim)."""
        codes = np.arange(self.order, dtype=np.int64)
        return (codes[:, None] // self._powers[None, :]) % self.p

    @cached_property
    def one(self) -> int:
        return int(self.encode(self._one_coords))

    @property
    def zero(self) -> int:
        return 0

    # -- tables -------------------------------------------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        table = np.empty((self.order, self.order), dtype=np.int64)
        X = self.coords
        for start in range(0, self.order, _CHUNK):
            block = X[start:start + _CHUNK]
            table[start:start + _CHUNK] = self.encode(block[:, None, :] + X[None, :, :])
        return table

    @cached_property
    def mul_table(self) -> np.ndarray:
        table = np.empty((self.order, self.order), dtype=np.int64)
        X = self.coords
        C = self.structure
        for start in range(0, self.order, _CHUNK):
            block = X[start:start + _CHUNK]
            left = np.einsum('ai,ijk->ajk', block, C)
            table[start:start + _CHUNK] = self.encode(np.einsum('bj,ajk->abk', X, left))
        return table

    @cached_property
    def neg_table(self) -> np.ndarray:
        return self.encode(-self.coords)

    @cached_property
    def unit_mask(self) -> np.ndarray:
        return (self.mul_table == self.one).any(axis=1)

    @cached_property
    def inv_table(self) -> np.ndarray:
        """Inverse codes, -1 for non-units."""
        hits = self.mul_table == self.one
        return np.where(hits.any(axis=1), hits.argmax(axis=1), -1)

    # -- element arithmetic (scalars or arrays of codes) --------------------

    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        return self.inv_table[a]

    def is_unit(self, a) -> bool:
        return bool(self.unit_mask[a])

    def power(self, a: int, e: int) -> int:
        result, base = self.one, int(a)
        if e < 0:
            base, e = int(self.inv_table[base]), -e
        while e:
            if e & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        return int(self.encode((n % self.p) * self._one_coords))

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def units(self) -> np.ndarray:
        return np.flatnonzero(self.unit_mask)

    def non_units(self) -> np.ndarray:
        return np.flatnonzero(~self.unit_mask)

    def sum(self, values: Sequence[int]) -> int:
        total = self.zero
        for v in values:
            total = int(self.add_table[total, v])
        return total

    # -- structure ----------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.parts is None and self.field_degree == self.dim

    @property
    def is_local(self) -> bool:
        return self.parts is None

    @cached_property
    def components(self) -> List[Tuple["FiniteRing", int]]:
        """Local factors with their digit offsets: code = sum(code_i * p**offset_i)."""
        if self.parts is None:
            return [(self, 0)]
        left, right = self.parts
        return left.components + [(r, off + left.dim) for r, off in right.components]

    def split(self, codes: np.ndarray) -> List[np.ndarray]:
        """Component codes of an array of codes, one array per local factor."""
        codes = np.asarray(codes, dtype=np.int64)
        return [(codes // self.p ** off) % ring.order for ring, off in self.components]

    def join(self, parts: Sequence[np.ndarray]) -> np.ndarray:
        total = 0
        for (ring, off), codes in zip(self.components, parts):
            total = total + np.asarray(codes, dtype=np.int64) * self.p ** off
        return total

    def warm(self) -> None:
        """Build every table up front, before threads share the ring."""
        _ = (self.add_table, self.mul_table, self.neg_table, self.unit_mask, self.inv_table)

    def verify_axioms(self, samples: int = 200, seed: int = 0) -> None:
        """
        Check ring axioms on random triples.

        Raises:
            StructureConstantError: If commutativity, associativity,
                distributivity or the unit law fails.
        """
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, self.order, size=(3, samples))
        mul, add = self.mul_table, self.add_table
        checks = {
            "commutativity": mul[a, b] == mul[b, a],
            "associativity": mul[mul[a, b], c] == mul[a, mul[b, c]],
            "distributivity": mul[a, add[b, c]] == add[mul[a, b], mul[a, c]],
            "unit": mul[a, self.one] == a,
        }
        for law, ok in checks.items():
            if not np.all(ok):
                raise StructureConstantError(f"{law} fails in {self.name}")

    # -- automorphisms ------------------------------------------------------

    def frobenius(self, power: int = 1) -> np.ndarray:
        """
        The field Frobenius raised to a power, extended coefficientwise.

        Adjoined nilpotent generators are fixed; on products it acts on both
        factors.
        """
        if self.parts is not None:
            left, right = self.parts
            return self._combine(left.frobenius(power), right.frobenius(power))
        k = self.field_degree or 1
        q = self.p ** k
        field_map = np.arange(q, dtype=np.int64)
        for _ in range(power % k):
            field_map = self._field_frobenius[field_map]
        codes = np.arange(self.order, dtype=np.int64)
        result = np.zeros_like(codes)
        digits = self.dim // k
        for s in range(digits):
            result += field_map[(codes // q ** s) % q] * q ** s
        return result

    def _combine(self, left_map: np.ndarray, right_map: np.ndarray) -> np.ndarray:
        left, _ = self.parts
        codes = np.arange(self.order, dtype=np.int64)
        base = self.p ** left.dim
        return left_map[codes % base] + base * right_map[codes // base]

    def automorphism(self, spec: str) -> np.ndarray:
        """
        An automorphism as a code -> code table.

        Grammar: factor ('*' factor)*, applied right to left, with
        factor := 'id' | 'frob' ['^' int] | 'swap' | '(' spec ',' spec ')'.

        Raises:
            RingSpecError: For unknown names, swap of non-identical factors,
                or a map that is not a ring automorphism.
        """
        table = _AutomorphismParser(self, spec).parse()
        self.verify_automorphism(table, spec)
        return table

    def verify_automorphism(self, table: np.ndarray, label: str = "map") -> None:
        if sorted(table.tolist()) != list(range(self.order)):
            raise RingSpecError(f"{label} is not a bijection of {self.name}")
        mul, add = self.mul_table, self.add_table
        if not (np.array_equal(table[mul], mul[table[:, None], table[None, :]])
                and np.array_equal(table[add], add[table[:, None], table[None, :]])
                and table[self.one] == self.one):
            raise RingSpecError(f"{label} is not a ring automorphism of {self.name}")

    # -- literals -----------------------------------------------------------

    def parse_element(self, text: str) -> int:
        """
        Parse an element literal.

        Accepted: an integer; a coordinate tuple "(c0,c1,...)"; a polynomial
        expression in integers and the ring's symbols ("1+e", "x^2+1", "2*a");
        "<u|v>" for the two factors of a product.

        Raises:
            RingSpecError: If the literal does not parse.
        """
        text = text.strip()
        if text.startswith("<") and text.endswith(">"):
            if self.parts is None:
                raise RingSpecError(f"{text!r}: pair literals need a product ring")
            inner = text[1:-1]
            depth, cut = 0, -1
            for i, ch in enumerate(inner):
                depth += ch in "(<"
                depth -= ch in ")>"
                if ch == "|" and depth == 0:
                    cut = i
                    break
            if cut < 0:
                raise RingSpecError(f"pair literal {text!r} needs '|'")
            left, right = self.parts
            base = self.p ** left.dim
            return left.parse_element(inner[:cut]) + base * right.parse_element(inner[cut + 1:])
        if text.startswith("(") and text.endswith(")") and "," in text:
            parts = text[1:-1].split(",")
            if len(parts) != self.dim:
                raise RingSpecError(f"coordinate literal {text!r} needs {self.dim} entries")
            try:
                return int(self.encode(np.array([int(x) for x in parts])))
            except ValueError:
                raise RingSpecError(f"bad coordinate literal {text!r}")
        return _ElementParser(self, text).parse()

    def format_element(self, code: int) -> str:
        """Inverse of parse_element: integers for F_p, tuples or pairs otherwise."""
        code = int(code)
        if self.parts is not None:
            left, right = self.parts
            base = self.p ** left.dim
            return f"<{left.format_element(code % base)}|{right.format_element(code // base)}>"
        if self.dim == 1:
            return str(code)
        return "(" + ",".join(str(int(c)) for c in self.coords[code]) + ")"


# -- constructors -------------------------------------------------------------


def _first_irreducible(p: int, k: int) -> List[int]:
    """Coefficients (high to low) of the first monic irreducible of degree k over F_p."""
    for tail in iter_product(range(p), repeat=k):
        f = [1] + list(tail)
        if gf_irreducible_p(f, p, ZZ):
            return f
    raise RingSpecError(f"no irreducible polynomial of degree {k} over F_{p}")


def finite_field(p: int, k: int = 1, max_order: Optional[int] = None) -> FiniteRing:
    """F_{p^k} over the first irreducible polynomial in lexicographic order."""
    validate_prime(p, "field characteristic")
    if k < 1:
        raise RingSpecError("field degree must be positive")
    name = f"F({p})" if k == 1 else f"F({p},{k})"
    if k == 1:
        structure = np.ones((1, 1, 1), dtype=np.int64)
        ring = FiniteRing(p, structure, [1], name, field_degree=1,
                          field_frobenius=np.arange(p, dtype=np.int64), max_order=max_order)
        return ring

    f = _first_irreducible(p, k)
    low = np.array(f[::-1][:k], dtype=np.int64)
    # x^s reduced mod f, for s < 2k - 1
    powers = [np.eye(k, dtype=np.int64)[0]]
    for _ in range(2 * k - 2):
        v = powers[-1]
        carry = v[k - 1]
        shifted = np.concatenate([[0], v[:k - 1]])
        powers.append((shifted - carry * low) % p)
    structure = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            structure[i, j] = powers[i + j]
    ring = FiniteRing(p, structure, np.eye(k, dtype=np.int64)[0], name, field_degree=k,
                      symbols={"x": p}, max_order=max_order)
    frob = np.array([ring.power(c, p) for c in range(ring.order)], dtype=np.int64)
    ring._field_frobenius = frob
    logger.debug("F(%d,%d) built over %s", p, k, f)
    return ring


def truncated_extension(base: FiniteRing, symbol: str, m: int,
                        max_order: Optional[int] = None) -> FiniteRing:
    """
    base[s]/(s^m).

    Coordinates (i, a) of e_i s^a sit at index a·dim + i, so the base ring
    keeps its codes.
    """
    if base.parts is not None:
        raise RingSpecError("adjoin to each factor before forming a product")
    if m < 2:
        raise RingSpecError(f"truncation exponent must be at least 2, got {m}")
    if symbol in base.symbols or symbol == "x":
        raise RingSpecError(f"symbol {symbol!r} is already used in {base.name}")
    d = base.dim
    structure = np.zeros((d * m, d * m, d * m), dtype=np.int64)
    for a in range(m):
        for b in range(m - a):
            structure[a * d:(a + 1) * d, b * d:(b + 1) * d, (a + b) * d:(a + b + 1) * d] = base.structure
    one = np.concatenate([base._one_coords, np.zeros(d * (m - 1), dtype=np.int64)])
    suffix = f"[{symbol}]/{symbol}^{m}"
    symbols = dict(base.symbols)
    symbols[symbol] = base.one * base.p ** d
    return FiniteRing(base.p, structure, one, base.name + suffix,
                      field_degree=base.field_degree, symbols=symbols,
                      field_frobenius=base._field_frobenius, max_order=max_order)


def dual_numbers(base: FiniteRing, symbol: str = "e") -> FiniteRing:
    return truncated_extension(base, symbol, 2)


def product_ring(left: FiniteRing, right: FiniteRing,
                 max_order: Optional[int] = None) -> FiniteRing:
    """
    left x right.

    Raises:
        RingSpecError: If the characteristics differ.
    """
    if left.p != right.p:
        raise RingSpecError(f"mixed characteristic product {left.name} x {right.name}")
    d1, d2 = left.dim, right.dim
    structure = np.zeros((d1 + d2,) * 3, dtype=np.int64)
    structure[:d1, :d1, :d1] = left.structure
    structure[d1:, d1:, d1:] = right.structure
    one = np.concatenate([left._one_coords, right._one_coords])
    name = f"({left.name})x({right.name})"
    return FiniteRing(left.p, structure, one, name, parts=(left, right), max_order=max_order)


# -- parsers --------------------------------------------------------------------

_RING_TOKEN = re.compile(r"\s*(F\(\s*\d+\s*(?:,\s*\d+\s*)?\)|\[[a-wyz]\]/[a-wyz]\^\d+|[()x])")


class _RingParser:
    def __init__(self, spec: str) -> None:
        self.spec = spec
        self.tokens: List[str] = []
        pos = 0
        text = spec.strip()
        while pos < len(text):
            match = _RING_TOKEN.match(text, pos)
            if not match:
                raise RingSpecError(f"cannot parse ring spec {spec!r} at position {pos}")
            self.tokens.append(match.group(1).replace(" ", ""))
            pos = match.end()
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise RingSpecError(f"unexpected end of ring spec {self.spec!r}")
        self.pos += 1
        return token

    def parse(self) -> FiniteRing:
        if not self.tokens:
            raise RingSpecError("empty ring spec")
        ring = self.ring()
        if self.peek() is not None:
            raise RingSpecError(f"trailing input in ring spec {self.spec!r}")
        return ring

    def ring(self) -> FiniteRing:
        result = self.term()
        while self.peek() == "x":
            self.take()
            result = product_ring(result, self.term())
        return result

    def term(self) -> FiniteRing:
        result = self.atom()
        while self.peek() is not None and self.peek().startswith("["):
            token = self.take()
            symbol, rest = token[1], token[3:]
            power_symbol, m = rest.split("^")
            if power_symbol != symbol:
                raise RingSpecError(f"suffix {token!r} must use one symbol")
            result = truncated_extension(result, symbol, int(m))
        return result

    def atom(self) -> FiniteRing:
        token = self.take()
        if token == "(":
            inner = self.ring()
            if self.take() != ")":
                raise RingSpecError(f"unbalanced parentheses in {self.spec!r}")
            return inner
        if token.startswith("F("):
            args = [int(a) for a in token[2:-1].split(",")]
            try:
                validate_prime(args[0], "field characteristic")
            except Exception as e:
                raise RingSpecError(str(e))
            return finite_field(*args)
        raise RingSpecError(f"unexpected token {token!r} in ring spec {self.spec!r}")


_ELEMENT_TOKEN = re.compile(r"\s*(\d+|[a-z]|[-+*^()])")


class _ElementParser:
    def __init__(self, ring: FiniteRing, text: str) -> None:
        self.ring = ring
        self.text = text
        self.tokens: List[str] = []
        pos = 0
        stripped = text.strip()
        while pos < len(stripped):
            match = _ELEMENT_TOKEN.match(stripped, pos)
            if not match:
                raise RingSpecError(f"cannot parse element {text!r} of {ring.name}")
            self.tokens.append(match.group(1))
            pos = match.end()
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise RingSpecError(f"unexpected end of element {self.text!r}")
        self.pos += 1
        return token

    def parse(self) -> int:
        if not self.tokens:
            raise RingSpecError("empty element literal")
        value = self.expr()
        if self.peek() is not None:
            raise RingSpecError(f"trailing input in element {self.text!r}")
        return value

    def expr(self) -> int:
        R = self.ring
        negate = False
        if self.peek() in ("-", "+"):
            negate = self.take() == "-"
        value = self.term()
        if negate:
            value = int(R.neg(value))
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = int(R.add(value, rhs) if op == "+" else R.sub(value, rhs))
        return value

    def term(self) -> int:
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = int(self.ring.mul(value, self.factor()))
        return value

    def factor(self) -> int:
        R = self.ring
        token = self.take()
        if token == "(":
            value = self.expr()
            if self.take() != ")":
                raise RingSpecError(f"unbalanced parentheses in {self.text!r}")
        elif token.isdigit():
            value = R.from_int(int(token))
        elif token in R.symbols:
            value = R.symbols[token]
        else:
            raise RingSpecError(f"unknown symbol {token!r} in {R.name}")
        if self.peek() == "^":
            self.take()
            exponent = self.take()
            if not exponent.isdigit():
                raise RingSpecError(f"bad exponent {exponent!r} in {self.text!r}")
            value = R.power(value, int(exponent))
        return value


class _AutomorphismParser:
    _TOKEN = re.compile(r"\s*(id|frob|swap|\d+|[-*^(),])")

    def __init__(self, ring: FiniteRing, spec: str) -> None:
        self.ring = ring
        self.spec = spec
        self.tokens: List[str] = []
        pos = 0
        text = spec.strip()
        while pos < len(text):
            match = self._TOKEN.match(text, pos)
            if not match:
                raise RingSpecError(f"cannot parse automorphism {spec!r}")
            self.tokens.append(match.group(1))
            pos = match.end()
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise RingSpecError(f"unexpected end of automorphism {self.spec!r}")
        self.pos += 1
        return token

    def parse(self) -> np.ndarray:
        table = self.composite(self.ring)
        if self.peek() is not None:
            raise RingSpecError(f"trailing input in automorphism {self.spec!r}")
        return table

    def composite(self, ring: FiniteRing) -> np.ndarray:
        table = self.factor(ring)
        while self.peek() == "*":
            self.take()
            inner = self.factor(ring)
            table = table[inner]
        return table

    def factor(self, ring: FiniteRing) -> np.ndarray:
        token = self.take()
        if token == "id":
            return np.arange(ring.order, dtype=np.int64)
        if token == "frob":
            power = 1
            if self.peek() == "^":
                self.take()
                sign = -1 if self.peek() == "-" else 1
                if sign < 0:
                    self.take()
                power = sign * int(self.take())
            return ring.frobenius(power)
        if token == "swap":
            if ring.parts is None:
                raise RingSpecError(f"swap needs a product ring, not {ring.name}")
            left, right = ring.parts
            if left.structure.shape != right.structure.shape or not np.array_equal(left.structure, right.structure):
                raise RingSpecError(f"swap needs identical factors in {ring.name}")
            codes = np.arange(ring.order, dtype=np.int64)
            base = ring.p ** left.dim
            return codes // base + base * (codes % base)
        if token == "(":
            if ring.parts is None:
                raise RingSpecError(f"componentwise maps need a product ring, not {ring.name}")
            left, right = ring.parts
            left_map = self.composite(left)
            if self.take() != ",":
                raise RingSpecError(f"expected ',' in automorphism {self.spec!r}")
            right_map = self.composite(right)
            if self.take() != ")":
                raise RingSpecError(f"expected ')' in automorphism {self.spec!r}")
            return ring._combine(left_map, right_map)
        raise RingSpecError(f"unknown automorphism {token!r}")


@lru_cache(maxsize=None)
def _make_ring_cached(spec: str) -> FiniteRing:
    ring = _RingParser(spec).parse()
    ring.verify_axioms()
    return ring


def make_ring(spec: str) -> FiniteRing:
    """
    Build (or fetch) the ring named by a spec string.

    Raises:
        RingSpecError: For malformed specs, non-prime bases, mixed
            characteristic products, or rings above the table size limit.
    """
    return _make_ring_cached(re.sub(r"\s+", "", spec))
