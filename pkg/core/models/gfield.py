"""
Finite Field Model

This module provides exact arithmetic in F_q, q = p^a, on top of the galois library.
A field is described by an immutable FieldSpec whose modulus is the lexicographically
smallest primitive polynomial, so the class of the polynomial variable t generates F_q^*.

Elements are identified by their integer code sum(c_i * p^i), where c_i is the
coefficient of t^i. Code order is the canonical element order used everywhere.
The FieldTables helper caches lookup tables built from galois so that the matrix and
point-set layers can do scalar and vectorized arithmetic on codes directly.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import galois
import numpy as np
from sympy import isprime, primefactors

from core.errors import FieldArithmeticError, InvalidArgumentError

logger = logging.getLogger("core.models.gfield")

MAX_DEGREE = 8
MAX_ORDER = 2 ** 31
# Largest q for which code lookup tables are built
MAX_TABLE_ORDER = 1 << 16
# Largest extension field that gets a full q x q addition table
MAX_ADD_TABLE_ORDER = 256

# ==================== FIELD SPECIFICATION ====================

@dataclass(frozen=True)
class FieldSpec:
    """
    The field F_q with q = p^a and a fixed monic modulus.

    The modulus is stored low degree first and has length a + 1.
    For a = 1 the modulus is x (the prime field shortcut).
    """

    p: int
    a: int
    modulus: Tuple[int, ...]
    q: int

    def __repr__(self) -> str:
        return f"F_{self.q}" if self.a == 1 else f"F_{self.p}^{self.a}"

    @property
    def is_prime_field(self) -> bool:
        return self.a == 1

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def tables(self) -> "FieldTables":
        return field_tables(self)

    @property
    def galois_field(self):
        """The galois FieldArray class realising this spec."""
        return _galois_field(self.p, self.a, self.modulus)

    def element(self, code: int) -> "FieldElement":
        """Element with the given integer code."""
        if not 0 <= code < self.q:
            raise InvalidArgumentError(f"code {code} is not an element of {self!r}")
        return FieldElement(self, code_to_coeffs(self, code))

    def from_int(self, value: int) -> "FieldElement":
        """Image of an integer in the prime subfield."""
        return self.element(value % self.p)


def field_make(p: int, a: int = 1) -> FieldSpec:
    """
    Construct the field F_{p^a}.

    Args:
        p: Prime characteristic
        a: Extension degree, 1 <= a <= 8

    Returns:
        FieldSpec with the lexicographically smallest primitive modulus

    Raises:
        InvalidArgumentError: p is not prime or a bound is violated
    """
    return _field_make(int(p), int(a))


@lru_cache(maxsize=None)
def _field_make(p: int, a: int) -> FieldSpec:
    if not isprime(p):
        raise InvalidArgumentError(f"characteristic {p} is not prime")
    if not 1 <= a <= MAX_DEGREE:
        raise InvalidArgumentError(f"extension degree {a} outside 1..{MAX_DEGREE}")
    q = p ** a
    if q > MAX_ORDER:
        raise InvalidArgumentError(f"field order {p}^{a} exceeds 2^31")

    if a == 1:
        modulus: Tuple[int, ...] = (0, 1)
    else:
        poly = galois.primitive_poly(p, a, method="min")
        # galois lists coefficients highest degree first
        modulus = tuple(int(c) for c in reversed(poly.coeffs))

    logger.debug(f"Constructed F_{q} with modulus {modulus}")
    return FieldSpec(p=p, a=a, modulus=modulus, q=q)


@lru_cache(maxsize=None)
def _galois_field(p: int, a: int, modulus: Tuple[int, ...]):
    if a == 1:
        return galois.GF(p)
    prime_field = galois.GF(p)
    poly = galois.Poly(list(reversed(modulus)), field=prime_field)
    return galois.GF(p ** a, irreducible_poly=poly)


def code_to_coeffs(spec: FieldSpec, code: int) -> Tuple[int, ...]:
    """Coefficient tuple (low degree first) of an element code."""
    coeffs = []
    for _ in range(spec.a):
        code, c = divmod(code, spec.p)
        coeffs.append(c)
    return tuple(coeffs)


def coeffs_to_code(spec: FieldSpec, coeffs: Sequence[int]) -> int:
    """Integer code of a coefficient sequence (low degree first)."""
    code = 0
    for c in reversed(coeffs):
        code = code * spec.p + c
    return code


def field_elements(spec: FieldSpec) -> List["FieldElement"]:
    """All elements of the field in canonical order."""
    return [spec.element(c) for c in range(spec.q)]


# ==================== FIELD ELEMENTS ====================

@dataclass(frozen=True)
class FieldElement:
    """
    An element of F_q as a fixed-length coefficient vector.

    Arithmetic goes through the galois field class of the spec; mixing elements of
    different specs raises InvalidArgumentError.
    """

    spec: FieldSpec
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.spec.a or any(not 0 <= c < self.spec.p for c in self.coeffs):
            raise InvalidArgumentError(f"invalid coefficients {self.coeffs} for {self.spec!r}")

    @property
    def code(self) -> int:
        return coeffs_to_code(self.spec, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _gf(self):
        return self.spec.galois_field(self.code)

    def _wrap(self, value) -> "FieldElement":
        return self.spec.element(int(value))

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise InvalidArgumentError("field elements belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return arith(self, other, "add")

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return arith(self, other, "sub")

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return arith(self, other, "mul")

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return arith(self, other, "div")

    def __neg__(self) -> "FieldElement":
        return neg(self)

    def __pow__(self, k: int) -> "FieldElement":
        return power(self, k)

    def __lt__(self, other: "FieldElement") -> bool:
        self._check(other)
        return self.code < other.code

    def __repr__(self) -> str:
        if self.spec.a == 1:
            return str(self.coeffs[0])
        terms = [f"{c}*t^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(terms)) or "0"


def arith(x: FieldElement, y: FieldElement, kind: str) -> FieldElement:
    """
    Binary field operation.

    Args:
        x: Left operand
        y: Right operand over the same field
        kind: One of 'add', 'sub', 'mul', 'div'

    Returns:
        The result as a FieldElement

    Raises:
        InvalidArgumentError: operands from different fields or unknown kind
        FieldArithmeticError: division by zero
    """
    x._check(y)
    a, b = x._gf(), y._gf()
    if kind == "add":
        return x._wrap(a + b)
    if kind == "sub":
        return x._wrap(a - b)
    if kind == "mul":
        return x._wrap(a * b)
    if kind == "div":
        if y.is_zero():
            raise FieldArithmeticError(f"division by zero in {x.spec!r}")
        return x._wrap(a / b)
    raise InvalidArgumentError(f"unknown field operation {kind!r}")


def inv(x: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises FieldArithmeticError on zero."""
    if x.is_zero():
        raise FieldArithmeticError(f"zero has no inverse in {x.spec!r}")
    return x._wrap(x._gf() ** -1)


def neg(x: FieldElement) -> FieldElement:
    return x._wrap(-x._gf())


def power(x: FieldElement, k: int) -> FieldElement:
    """x^k for any integer k (negative k needs x != 0)."""
    if k < 0:
        return power(inv(x), -k)
    if k == 0:
        return x.spec.one
    return x._wrap(x._gf() ** k)


def frobenius(x: FieldElement, i: int) -> FieldElement:
    """The automorphism x -> x^(p^i); i is taken modulo a."""
    i %= x.spec.a
    if i == 0:
        return x
    return x._wrap(x._gf() ** (x.spec.p ** i))


def multiplicative_order(x: FieldElement) -> int:
    """Order of a nonzero element in F_q^*."""
    if x.is_zero():
        raise FieldArithmeticError("zero has no multiplicative order")
    n = x.spec.q - 1
    order = n
    for r in primefactors(n):
        while order % r == 0 and power(x, order // r) == x.spec.one:
            order //= r
    return order


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest element (by code) generating F_q^*."""
    return spec.element(_primitive_code(spec))


@lru_cache(maxsize=None)
def _primitive_code(spec: FieldSpec) -> int:
    n = spec.q - 1
    if n == 1:
        return 1
    factors = primefactors(n)
    for code in range(2, spec.q):
        g = spec.element(code)
        if all(power(g, n // r) != spec.one for r in factors):
            return code
    raise InvalidArgumentError(f"{spec!r} has no primitive element")  # unreachable for a field


def prime_subfield(spec: FieldSpec) -> List[FieldElement]:
    """Elements of F_p inside F_q (codes 0..p-1)."""
    return [spec.element(c) for c in range(spec.p)]


# ==================== CODE TABLES ====================

class FieldTables:
    """
    Lookup tables over element codes, built once per field from galois arithmetic.

    Scalar methods take and return Python ints; the *_np methods work elementwise on
    integer numpy arrays of codes.
    """

    def __init__(self, spec: FieldSpec):
        if spec.q > MAX_TABLE_ORDER and not spec.is_prime_field:
            raise InvalidArgumentError(f"code tables need q <= {MAX_TABLE_ORDER}, got {spec.q}")
        self.spec = spec
        self.p = spec.p
        self.q = spec.q
        self.a = spec.a
        self.prime = spec.is_prime_field
        self.primitive = _primitive_code(spec)

        gf = spec.galois_field
        codes = np.arange(self.q, dtype=np.int64)

        if self.prime:
            self.exp_list: List[int] = []
            self.log_list: List[int] = []
            self.add_list: Optional[List[int]] = None
            self.neg_np_table = (-codes) % self.p
            self.inv_np_table = np.zeros(self.q, dtype=np.int64)
            self.inv_np_table[1:] = [pow(int(c), -1, self.p) for c in codes[1:]]
            self.frob_np_tables = [codes]
        else:
            # Powers of the primitive element give exp/log
            times_g = (gf(codes) * gf(self.primitive)).view(np.ndarray).astype(np.int64)
            exp = np.empty(self.q - 1, dtype=np.int64)
            x = 1
            for k in range(self.q - 1):
                exp[k] = x
                x = int(times_g[x])
            log = np.full(self.q, -1, dtype=np.int64)
            log[exp] = np.arange(self.q - 1)
            self.exp_np = exp
            self.log_np = log
            self.exp_list = exp.tolist() * 2
            self.log_list = log.tolist()
            self.neg_np_table = (-gf(codes)).view(np.ndarray).astype(np.int64)
            self.inv_np_table = np.zeros(self.q, dtype=np.int64)
            self.inv_np_table[1:] = (gf(codes[1:]) ** -1).view(np.ndarray)
            self.frob_np_tables = [
                (gf(codes) ** (self.p ** i)).view(np.ndarray).astype(np.int64) for i in range(self.a)
            ]
            self.powers_of_p = [self.p ** i for i in range(self.a)]
            self.add_np_table: Optional[np.ndarray] = None
            self.add_list = None
            if self.q <= MAX_ADD_TABLE_ORDER:
                table = (gf(codes)[:, None] + gf(codes)[None, :]).view(np.ndarray).astype(np.int64)
                self.add_np_table = table
                self.add_list = table.ravel().tolist()

        self.neg_list = self.neg_np_table.tolist()
        self.inv_list = self.inv_np_table.tolist()
        self.frob_lists = [t.tolist() for t in self.frob_np_tables]

    # ---- scalar arithmetic on codes ----

    def add(self, x: int, y: int) -> int:
        if self.prime:
            return (x + y) % self.p
        if self.add_list is not None:
            return self.add_list[x * self.q + y]
        total = 0
        for m in reversed(self.powers_of_p):
            total = total * self.p + ((x // m) % self.p + (y // m) % self.p) % self.p
        return total

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg_list[y])

    def mul(self, x: int, y: int) -> int:
        if self.prime:
            return (x * y) % self.p
        if x == 0 or y == 0:
            return 0
        return self.exp_list[self.log_list[x] + self.log_list[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldArithmeticError(f"zero has no inverse in {self.spec!r}")
        return self.inv_list[x]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def neg(self, x: int) -> int:
        return self.neg_list[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        if k == 0:
            return 1
        if x == 0:
            return 0
        if self.prime:
            return pow(x, k, self.p)
        return self.exp_list[(self.log_list[x] * k) % (self.q - 1)]

    def frob(self, x: int, i: int) -> int:
        return self.frob_lists[i % self.a][x]

    def primitive_power(self, k: int) -> int:
        """Code of g^k for the primitive element g."""
        if self.prime:
            return pow(self.primitive, k % (self.q - 1), self.p)
        return self.exp_list[k % (self.q - 1)]

    # ---- vectorized arithmetic on code arrays ----

    def add_np(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.prime:
            return (x + y) % self.p
        if self.add_np_table is not None:
            return self.add_np_table[x, y]
        total = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        for m in self.powers_of_p:
            total += (((x // m) % self.p + (y // m) % self.p) % self.p) * m
        return total

    def mul_np(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.prime:
            return (x * y) % self.p
        x = np.asarray(x)
        y = np.asarray(y)
        zero = (x == 0) | (y == 0)
        logs = (self.log_np[x] + self.log_np[y]) % (self.q - 1)
        return np.where(zero, 0, self.exp_np[logs])

    def neg_np(self, x: np.ndarray) -> np.ndarray:
        return self.neg_np_table[x]

    def inv_np(self, x: np.ndarray) -> np.ndarray:
        if np.any(np.asarray(x) == 0):
            raise FieldArithmeticError(f"zero has no inverse in {self.spec!r}")
        return self.inv_np_table[x]

    def frob_np(self, x: np.ndarray, i: int) -> np.ndarray:
        i %= self.a
        if i == 0:
            return np.asarray(x)
        return self.frob_np_tables[i][x]


@lru_cache(maxsize=None)
def field_tables(spec: FieldSpec) -> FieldTables:
    """Cached FieldTables for a spec."""
    logger.debug(f"Building code tables for {spec!r}")
    return FieldTables(spec)
