"""Arithmetic in GF(p^n) with trace maps and dual bases.

Elements are polynomials over Z_p reduced modulo a monic irreducible
polynomial, stored as little-endian coefficient tuples ``(c_0, ..., c_{n-1})``
and canonically ordered by the integer encoding ``sum c_i p^i``.

The default modulus comes from a built-in Conway-polynomial table for the
small fields this package exercises; outside the table a deterministic
fallback picks the lexicographically smallest monic primitive polynomial.
Any monic irreducible modulus can be supplied explicitly instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError, UnsupportedDimensionError

__all__ = [
    "FiniteField",
    "FieldElement",
    "default_modulus",
    "is_irreducible",
    "is_primitive_modulus",
    "CONWAY_POLYNOMIALS",
]

MAX_ORDER = 4096

# Little-endian coefficients (constant term first) of C_{p,n}.
CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _poly_trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of polynomial division over Z_p (little-endian lists)."""
    num = _poly_trim([x % p for x in num])
    den = _poly_trim([x % p for x in den])
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(den[-1], p - 2, p) if den[-1] != 1 else 1
    out = list(num)
    while len(out) >= len(den) and _poly_trim(list(out)) != [0]:
        shift = len(out) - len(den)
        factor = (out[-1] * inv_lead) % p
        if factor:
            for i, c in enumerate(den):
                out[shift + i] = (out[shift + i] - factor * c) % p
        out.pop()
        if not out:
            out = [0]
    return _poly_trim(out)


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def is_irreducible(modulus: tuple[int, ...] | list[int], p: int) -> bool:
    """Exhaustive check: no monic factor of degree up to deg/2."""
    mod = _poly_trim([c % p for c in modulus])
    n = len(mod) - 1
    if n < 1:
        return False
    for deg in range(1, n // 2 + 1):
        # Enumerate monic polynomials of this degree by their lower coefficients.
        for code in range(p**deg):
            cand = []
            k = code
            for _ in range(deg):
                cand.append(k % p)
                k //= p
            cand.append(1)
            if _poly_mod(mod, cand, p) == [0]:
                return False
    return True


def _factor(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        while n % k == 0:
            if k not in out:
                out.append(k)
            n //= k
        k += 1
    if n > 1 and n not in out:
        out.append(n)
    return out


def is_primitive_modulus(modulus: tuple[int, ...] | list[int], p: int) -> bool:
    """True when x generates the multiplicative group mod the modulus."""
    mod = _poly_trim([c % p for c in modulus])
    n = len(mod) - 1
    if not is_irreducible(mod, p):
        return False
    q = p**n
    x = [0, 1] if n > 1 else [_poly_mod([0, 1], mod, p)[0]]

    def poly_pow(base: list[int], e: int) -> list[int]:
        result = [1]
        b = list(base)
        while e:
            if e & 1:
                result = _poly_mod(_poly_mul(result, b, p), mod, p)
            b = _poly_mod(_poly_mul(b, b, p), mod, p)
            e >>= 1
        return result

    for r in _factor(q - 1):
        if poly_pow(x, (q - 1) // r) == [1]:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Canonical monic irreducible polynomial for GF(p^n)."""
    if (p, n) in CONWAY_POLYNOMIALS:
        return CONWAY_POLYNOMIALS[(p, n)]
    if p**n > MAX_ORDER:
        raise UnsupportedDimensionError(
            f"no built-in modulus beyond order {MAX_ORDER}; supply one explicitly"
        )
    # Deterministic fallback: smallest integer encoding that is primitive.
    for code in range(p**n):
        coeffs = []
        k = code
        for _ in range(n):
            coeffs.append(k % p)
            k //= p
        coeffs.append(1)
        if is_primitive_modulus(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError(f"no primitive polynomial found for GF({p}^{n})")


@dataclass(frozen=True)
class FiniteField:
    """GF(p^n) defined by a monic irreducible modulus of degree n."""

    p: int
    n: int
    modulus: tuple[int, ...]

    def __init__(self, p: int, n: int = 1, modulus: tuple[int, ...] | None = None):
        if not _is_prime(p):
            raise UnsupportedDimensionError(f"field characteristic must be prime, got {p}")
        if n < 1:
            raise UnsupportedDimensionError(f"extension degree must be >= 1, got {n}")
        if p**n > MAX_ORDER:
            raise UnsupportedDimensionError(f"field order {p**n} exceeds supported {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ParseError(f"modulus must be monic of degree {n}")
        if not is_irreducible(modulus, p):
            raise ParseError(f"modulus {list(modulus)} is reducible over GF({p})")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "modulus", modulus)

    @property
    def order(self) -> int:
        return self.p**self.n

    def element(self, value) -> "FieldElement":
        """Coerce an int code, coefficient sequence or element into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ParseError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                value %= self.order
            coeffs = []
            k = value
            for _ in range(self.n):
                coeffs.append(k % self.p)
                k //= self.p
            return FieldElement(self, tuple(coeffs))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.n:
            red = _poly_mod(coeffs, list(self.modulus), self.p)
            coeffs = red
        coeffs = coeffs + [0] * (self.n - len(coeffs))
        return FieldElement(self, tuple(coeffs[: self.n]))

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def generator(self) -> "FieldElement":
        """The class x of the modulus variable."""
        if self.n == 1:
            return self.element(1)
        return self.element([0, 1])

    def elements(self) -> list["FieldElement"]:
        """All field elements in canonical integer order."""
        return [self.element(k) for k in range(self.order)]

    def polynomial_basis(self) -> list["FieldElement"]:
        """The basis 1, x, ..., x^(n-1)."""
        out = []
        for i in range(self.n):
            coeffs = [0] * self.n
            coeffs[i] = 1
            out.append(FieldElement(self, tuple(coeffs)))
        return out

    def dual_basis(self, basis: list["FieldElement"] | None = None) -> list["FieldElement"]:
        """The unique basis with ``tr(dual_i * basis_j) = delta_ij``."""
        if basis is None:
            basis = self.polynomial_basis()
        if len(basis) != self.n:
            raise ParseError(f"a basis of GF({self.p}^{self.n}) needs {self.n} elements")
        n, p = self.n, self.p
        # Trace Gram matrix over Z_p; invert by Gauss-Jordan mod p.
        M = [[(basis[i] * basis[j]).trace() for j in range(n)] for i in range(n)]
        A = [row[:] + [1 if k == i else 0 for k in range(n)] for i, row in enumerate(M)]
        for col in range(n):
            piv = next((r for r in range(col, n) if A[r][col] % p), None)
            if piv is None:
                raise ParseError("given elements do not form a basis")
            A[col], A[piv] = A[piv], A[col]
            inv = pow(A[col][col], p - 2, p)
            A[col] = [(v * inv) % p for v in A[col]]
            for r in range(n):
                if r != col and A[r][col]:
                    f = A[r][col]
                    A[r] = [(A[r][k] - f * A[col][k]) % p for k in range(2 * n)]
        Minv = [row[n:] for row in A]
        out = []
        for j in range(n):
            acc = self.zero
            for i in range(n):
                acc = acc + self.element(Minv[i][j]) * basis[i]
            out.append(acc)
        return out

    def expand(self, x: "FieldElement", basis: list["FieldElement"] | None = None) -> tuple[int, ...]:
        """Coordinates of x in the given basis (prime-subfield integers)."""
        if basis is None:
            basis = self.polynomial_basis()
        dual = self.dual_basis(basis)
        return tuple((x * e).trace() for e in dual)

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(doc: dict) -> "FiniteField":
        try:
            return FiniteField(int(doc["p"]), int(doc["n"]), tuple(doc["modulus"]))
        except KeyError as exc:
            raise ParseError(f"field document missing key {exc}") from exc


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^n), little-endian coefficient tuple over Z_p."""

    field: FiniteField
    coeffs: tuple[int, ...]

    def _like(self, other) -> "FieldElement":
        return self.field.element(other)

    def __add__(self, other) -> "FieldElement":
        o = self._like(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, other) -> "FieldElement":
        o = self._like(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other) -> "FieldElement":
        o = self._like(other)
        p = self.field.p
        prod = _poly_mul(list(self.coeffs), list(o.coeffs), p)
        red = _poly_mod(prod, list(self.field.modulus), p)
        red = red + [0] * (self.field.n - len(red))
        return FieldElement(self.field, tuple(red[: self.field.n]))

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self ** (self.field.order - 2)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def trace(self) -> int:
        """Field trace into Z_p: sum of x^(p^i) for i < n."""
        acc = self.field.zero
        term = self
        for _ in range(self.field.n):
            acc = acc + term
            term = term**self.field.p
        if any(c != 0 for c in acc.coeffs[1:]):
            raise RuntimeError("trace did not land in the prime subfield")
        return acc.coeffs[0]

    def to_int(self) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.field.p + c
        return out

    def __repr__(self) -> str:
        return f"GF({self.field.p}^{self.field.n}):{self.to_int()}"
