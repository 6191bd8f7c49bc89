#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Exact arithmetic in F_{r^n}.

Elements are stored as coefficient vectors (c_0, ..., c_{n-1}) over F_r with
respect to the powers 1, x, ..., x^{n-1} of the modulus root. The enumeration
index of an element is sum_i c_i r^i; every "smallest" choice in the package
(modulus, primitive element, canonical representatives) uses this order.

Addition, multiplication, negation, inversion and trace are tabulated once per
field, fields are capped at ``DEFAULT_MAX_ORDER`` elements unless the
``WIGNERFF_CAP`` environment variable says otherwise.
"""

import functools
import itertools
import logging
import os
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from wignerff.utils.errors import (
    FieldError,
    FieldMismatchError,
    MalformedInputError,
    ZeroInverseError,
)


logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 64
MAX_ORDER_ENV = "WIGNERFF_CAP"

# names of 0, 1, x, x + 1 in F_4 with modulus x^2 + x + 1
F4_ALIASES = ("0", "1", "w", "wbar")


def is_prime(r: int) -> bool:
    if r < 2:
        return False
    return all(r % d for d in range(2, int(r ** 0.5) + 1))


def get_max_order(max_order: Optional[int] = None) -> int:
    """
    Resolve the field size cap: an explicit value wins, then WIGNERFF_CAP, then
    DEFAULT_MAX_ORDER.
    """
    if max_order is not None:
        return int(max_order)
    env = os.environ.get(MAX_ORDER_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise FieldError(f"{MAX_ORDER_ENV} must be an integer, got {env!r}")
    return DEFAULT_MAX_ORDER


# polynomials below are coefficient lists over F_r, lowest degree first


def _poly_trim(a: List[int]) -> List[int]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], r: int) -> List[int]:
    """Remainder of a divided by m over F_r; m must have a nonzero leading term."""
    a = [c % r for c in a]
    m = _poly_trim([c % r for c in m])
    dm = len(m) - 1
    lead_inv = pow(m[-1], r - 2, r) if r > 2 else 1
    for i in range(len(a) - 1, dm - 1, -1):
        coef = (a[i] * lead_inv) % r
        if coef:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - coef * m[j]) % r
    rem = a[:dm] if dm > 0 else [0]
    return rem + [0] * (max(dm, 1) - len(rem))


def _poly_mul(a: Sequence[int], b: Sequence[int], r: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % r
    return out


def _monic_polys(r: int, degree: int) -> Iterator[Tuple[int, ...]]:
    """Monic polynomials of a given degree, ordered by sum_i c_i r^i of the lower part."""
    for lower in itertools.product(range(r), repeat=degree):
        yield tuple(reversed(lower)) + (1,)


def is_irreducible(poly: Sequence[int], r: int) -> bool:
    """
    Exhaustive irreducibility test over F_r: no monic factor of degree
    1..deg/2 divides ``poly``. Degree-1 inputs are irreducible.
    """
    poly = _poly_trim([c % r for c in poly])
    degree = len(poly) - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for factor in _monic_polys(r, d):
            if not any(_poly_mod(poly, factor, r)):
                return False
    return True


def smallest_irreducible(r: int, n: int) -> Tuple[int, ...]:
    for poly in _monic_polys(r, n):
        if is_irreducible(poly, r):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{r}")


def format_polynomial(poly: Sequence[int]) -> str:
    terms = []
    for k in range(len(poly) - 1, -1, -1):
        c = poly[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


class FieldSpec(object):
    """
    The field F_{r^n} = F_r[x] / (modulus). Immutable; all tables are built at
    construction.
    """

    def __init__(self, r: int, n: int, modulus: Sequence[int]):
        if not is_prime(r):
            raise FieldError(f"characteristic must be prime, got {r}")
        if n < 1:
            raise FieldError(f"extension degree must be >= 1, got {n}")
        modulus = tuple(int(c) % r for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {n}: {modulus}")
        if not is_irreducible(modulus, r):
            raise FieldError(
                f"modulus {format_polynomial(modulus)} is reducible over F_{r}"
            )
        self.r = r
        self.n = n
        self.modulus = modulus
        self.N = r ** n
        self._build_tables()

    def _build_tables(self):
        r, n, N = self.r, self.n, self.N
        powers = r ** np.arange(n)
        coeffs = np.array(
            [[(i // r ** k) % r for k in range(n)] for i in range(N)], dtype=np.int64
        ).reshape(N, n)
        self._powers = powers
        self._coeffs = coeffs

        add = (coeffs[:, None, :] + coeffs[None, :, :]) % r
        self.add_table = (add * powers).sum(-1)
        self.neg_table = (((-coeffs) % r) * powers).sum(-1)

        mul = np.zeros((N, N), dtype=np.int64)
        for i in range(N):
            for j in range(i, N):
                prod = _poly_mul(coeffs[i], coeffs[j], r)
                rem = _poly_mod(prod, self.modulus, r)
                mul[i, j] = mul[j, i] = int(np.dot(rem[:n], powers))
        self.mul_table = mul

        inv = np.zeros(N, dtype=np.int64)
        for i in range(1, N):
            inv[i] = int(np.flatnonzero(mul[i] == 1)[0])
        self.inv_table = inv

        trace = np.zeros(N, dtype=np.int64)
        for i in range(N):
            acc, term = 0, i
            for _ in range(n):
                acc = self.add_table[acc, term]
                # term -> term^r
                t = 1
                for _ in range(r):
                    t = mul[t, term]
                term = t
            trace[i] = acc
        assert np.all(trace < r), "trace must land in the prime subfield"
        self.trace_table = trace

    # construction helpers

    def element(self, index: int) -> "FieldElement":
        if not 0 <= int(index) < self.N:
            raise FieldError(f"element index {index} out of range for F_{self.N}")
        return FieldElement(self, int(index))

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) != self.n or any(c < 0 or c >= self.r for c in coeffs):
            raise FieldError(f"invalid coefficient vector {coeffs} for F_{self.N}")
        return FieldElement(self, int(np.dot(coeffs, self._powers)))

    def from_prime(self, c: int) -> "FieldElement":
        return FieldElement(self, int(c) % self.r)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.N)]

    def nonzero_elements(self) -> List["FieldElement"]:
        return [FieldElement(self, i) for i in range(1, self.N)]

    def coeffs_of(self, index: int) -> Tuple[int, ...]:
        return tuple(int(c) for c in self._coeffs[index])

    def key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (self.r, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "FieldSpec(r={}, n={}, modulus={})".format(
            self.r, self.n, format_polynomial(self.modulus)
        )


class FieldElement(object):
    __slots__ = ("spec", "index")

    def __init__(self, spec: FieldSpec, index: int):
        self.spec = spec
        self.index = index

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.spec.coeffs_of(self.index)

    def _check(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec is not self.spec and other.spec != self.spec:
            raise FieldMismatchError(
                "cannot combine elements of {} and {}".format(self.spec, other.spec)
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, int(self.spec.add_table[self.index, other.index]))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __neg__(self):
        return FieldElement(self.spec, int(self.spec.neg_table[self.index]))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, int(self.spec.mul_table[self.index, other.index]))

    def inverse(self) -> "FieldElement":
        if self.index == 0:
            raise ZeroInverseError(f"zero has no inverse in F_{self.spec.N}")
        return FieldElement(self.spec, int(self.spec.inv_table[self.index]))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, exponent: int):
        exponent = int(exponent)
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = self.spec.one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def trace(self) -> "FieldElement":
        return FieldElement(self.spec, int(self.spec.trace_table[self.index]))

    def is_zero(self) -> bool:
        return self.index == 0

    def __bool__(self):
        return self.index != 0

    def __int__(self):
        return self.index

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.index == other.index and self.spec == other.spec

    def __lt__(self, other):
        return self.index < self._check(other).index

    def __hash__(self):
        return hash((self.spec.key(), self.index))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"FieldElement({format_element(self)}, F_{self.spec.N})"


@functools.lru_cache(maxsize=None)
def _build_field(r: int, n: int) -> FieldSpec:
    modulus = smallest_irreducible(r, n)
    spec = FieldSpec(r, n, modulus)
    logger.debug(f"Constructed F_{spec.N} with modulus {format_polynomial(modulus)}")
    return spec


def make_field(r: int, n: int = 1, max_order: Optional[int] = None) -> FieldSpec:
    """
    Build F_{r^n} with the smallest monic irreducible modulus.

    Args:
        r: prime characteristic.
        n: extension degree.
        max_order: size cap; see ``get_max_order``.
    Returns:
        FieldSpec, shared between calls with the same (r, n).
    """
    if not is_prime(r):
        raise FieldError(f"characteristic must be prime, got {r}")
    if n < 1:
        raise FieldError(f"extension degree must be >= 1, got {n}")
    cap = get_max_order(max_order)
    if r ** n > cap:
        raise FieldError(f"F_{r}^{n} has {r ** n} elements, above the cap of {cap}")
    return _build_field(r, n)


def field_of_order(N: int, max_order: Optional[int] = None) -> FieldSpec:
    for r in range(2, N + 1):
        if N % r == 0:
            n, m = 0, N
            while m % r == 0:
                m //= r
                n += 1
            if m != 1 or not is_prime(r):
                raise FieldError(f"{N} is not a prime power")
            return make_field(r, n, max_order=max_order)
    raise FieldError(f"{N} is not a prime power")


_ARITH_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "neg": lambda x, y: -x,
    "inv": lambda x, y: x.inverse(),
    "pow": lambda x, y: x ** y,
}


def arith(op: str, x: FieldElement, y: Union[FieldElement, int, None] = None):
    if op not in _ARITH_OPS:
        raise FieldError(f"unknown field operation {op!r}")
    return _ARITH_OPS[op](x, y)


def trace(x: FieldElement) -> FieldElement:
    return x.trace()


def multiplicative_order(x: FieldElement) -> int:
    if x.is_zero():
        raise ZeroInverseError("zero has no multiplicative order")
    one, acc, k = x.spec.one, x, 1
    while acc != one:
        acc = acc * x
        k += 1
    return k


def primitive_element(spec: FieldSpec) -> FieldElement:
    """The first element in enumeration order whose multiplicative order is N - 1."""
    for x in spec.nonzero_elements():
        if multiplicative_order(x) == spec.N - 1:
            return x
    raise AssertionError(f"F_{spec.N} has no primitive element")


def format_element(x: FieldElement) -> str:
    spec = x.spec
    if spec.N == 4:
        return F4_ALIASES[x.index]
    if spec.n == 1:
        return str(x.index)
    return "".join(str(c) for c in x.coeffs)


def parse_element(spec: FieldSpec, text: Union[str, int]) -> FieldElement:
    """
    Inverse of ``format_element``. Integers are read as enumeration indices, the
    strings "0" and "1" are accepted in every field.
    """
    if isinstance(text, FieldElement):
        if text.spec != spec:
            raise MalformedInputError(f"{text!r} is not an element of F_{spec.N}")
        return text
    if isinstance(text, (int, np.integer)):
        return spec.element(int(text))
    s = str(text).strip()
    if spec.N == 4 and s in F4_ALIASES:
        return spec.element(F4_ALIASES.index(s))
    if s in ("0", "1"):
        return spec.element(int(s))
    if spec.n == 1 and s.isdigit() and int(s) < spec.r:
        return spec.element(int(s))
    if len(s) == spec.n and s.isdigit() and all(int(c) < spec.r for c in s):
        return spec.from_coeffs([int(c) for c in s])
    raise MalformedInputError(f"cannot parse {text!r} as an element of F_{spec.N}")


def field_tables(spec: FieldSpec) -> Tuple[List[List[str]], List[List[str]]]:
    """Addition and multiplication tables as grids of element strings."""
    elems = spec.elements()
    add = [[format_element(a + b) for b in elems] for a in elems]
    mul = [[format_element(a * b) for b in elems] for a in elems]
    return add, mul
