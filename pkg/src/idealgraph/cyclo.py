"""Exact arithmetic in the cyclotomic field Q(w) = Q[t]/Phi_n(t).

The primitive n-th root of unity w is the class of t, kept symbolic so all
field arithmetic is exact rational; no floating point appears anywhere in
the Hamiltonian machinery.  Elements are canonical: a fixed-length tuple
of Fractions of length deg(Phi_n), so equality of field elements is
equality of coefficient tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class CycloError(Exception):
    pass


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n (index = power), lowest degree first.

    Computed by dividing t^n - 1 by Phi_d over the proper divisors d | n.
    """
    if n < 1:
        raise CycloError("conductor must be >= 1")
    num = [-1] + [0] * (n - 1) + [1]  # t^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_div_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials; den is monic here
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        out[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                num[k + i] -= coeff * d
    if any(num[: len(den) - 1]):
        raise CycloError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _phi_fractions(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in cyclotomic_polynomial(n))


def _reduce_mod_phi(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = _phi_fractions(n)
    deg = len(phi) - 1
    work = list(coeffs)
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            for i in range(len(phi)):
                work[k - deg + i] -= c * phi[i]
    work = work[:deg]
    work += [Fraction(0)] * (deg - len(work))
    return tuple(work)


@dataclass(frozen=True)
class CycloElem:
    """Element of Q[t]/Phi_n(t) in canonical reduced form."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        deg = len(_phi_fractions(self.n)) - 1
        if len(self.coeffs) != deg:
            raise CycloError(f"representative must have exactly {deg} coefficients")

    @classmethod
    def from_coeffs(cls, n: int, coeffs) -> "CycloElem":
        return cls(n, _reduce_mod_phi(n, [Fraction(c) for c in coeffs]))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: "CycloElem"):
        if self.n != other.n:
            raise CycloError(f"conductor mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "CycloElem") -> "CycloElem":
        self._check(other)
        return CycloElem(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloElem") -> "CycloElem":
        self._check(other)
        return CycloElem(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CycloElem") -> "CycloElem":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycloElem(self.n, _reduce_mod_phi(self.n, prod))

    def scaled(self, q) -> "CycloElem":
        q = Fraction(q)
        return CycloElem(self.n, tuple(q * c for c in self.coeffs))

    def inverse(self) -> "CycloElem":
        """Extended Euclid on (representative, Phi_n); Phi_n irreducible over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        g, s = _ext_gcd_mod(list(self.coeffs), list(_phi_fractions(self.n)))
        # g is a nonzero constant (the gcd); divide through
        inv = [c / g for c in s]
        return CycloElem(self.n, _reduce_mod_phi(self.n, inv))

    def __truediv__(self, other: "CycloElem") -> "CycloElem":
        return self * other.inverse()

    def __pow__(self, k: int) -> "CycloElem":
        if k < 0:
            return self.inverse() ** (-k)
        result = one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"CycloElem(n={self.n}, {render(self)})"


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv_lead
        q[k] = c
        if c:
            for i in range(len(b)):
                a[k + i] -= c * b[i]
    return q, _poly_trim(a[: len(b) - 1])


def _ext_gcd_mod(a: list[Fraction], m: list[Fraction]):
    """Return (g, s) with s*a = g (mod m), g a constant, via extended Euclid."""
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs1 = _poly_mul(q, s1)
        s0, s1 = s1, _poly_trim([x - y for x, y in _zip_pad(s0, qs1)])
    if len(r0) != 1:
        raise CycloError("element not invertible (conductor polynomial not coprime?)")
    return r0[0], s0


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _zip_pad(a: list[Fraction], b: list[Fraction]):
    length = max(len(a), len(b))
    a = a + [Fraction(0)] * (length - len(a))
    b = b + [Fraction(0)] * (length - len(b))
    return zip(a, b)


# ---------------------------------------------------------------------------
# constructors and rendering


def zero(n: int) -> CycloElem:
    return CycloElem.from_coeffs(n, [])


def one(n: int) -> CycloElem:
    return CycloElem.from_coeffs(n, [1])


def rational(n: int, q) -> CycloElem:
    return CycloElem.from_coeffs(n, [Fraction(q)])


def omega(n: int, k: int = 1) -> CycloElem:
    """w^k as an element of Q[t]/Phi_n(t)."""
    k %= n
    coeffs = [Fraction(0)] * k + [Fraction(1)]
    return CycloElem.from_coeffs(n, coeffs)


def render(elem: CycloElem, symbol: str = "w") -> str:
    """Human-readable form like '(-1/2)*w^3 + w + 1'."""
    parts = []
    for power in range(len(elem.coeffs) - 1, -1, -1):
        c = elem.coeffs[power]
        if c == 0:
            continue
        if power == 0:
            parts.append(str(c) if c > 0 else f"({c})")
            continue
        wpow = symbol if power == 1 else f"{symbol}^{power}"
        if c == 1:
            parts.append(wpow)
        elif c == -1:
            parts.append(f"-{wpow}")
        else:
            coeff = str(c) if c > 0 else f"({c})"
            parts.append(f"{coeff}*{wpow}")
    if not parts:
        return "0"
    return " + ".join(parts)
