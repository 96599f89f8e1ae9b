"""Exact integer polynomials and the closed forms for paths and cycles."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence, Union

IntLike = Union[int, "Polynomial"]

# F_k(-1) for k mod 6
_FIB_AT_MINUS_ONE = (1, 1, 0, -1, -1, 0)


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    if end == 0:
        return (0,)
    return tuple(coeffs[:end])


class Polynomial:
    """Dense polynomial with ascending integer coefficients.

    Stored trimmed, so ``==`` is structural equality.  The zero polynomial is
    ``(0,)`` and has degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = (0,)):
        coeffs = [int(c) for c in coeffs]
        self.coeffs = _trim(coeffs)

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "Polynomial":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw((int(c),))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        if c == 0:
            return ZERO
        return cls._raw((0,) * k + (int(c),))

    @property
    def degree(self) -> int:
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return render(self)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: IntLike) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntLike) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: IntLike) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: IntLike) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if a == (0,) or b == (0,):
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "Polynomial":
        if c == 0:
            return ZERO
        return Polynomial._raw(tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``x**k``."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero() or k == 0:
            return self
        return Polynomial._raw((0,) * k + self.coeffs)

    def __call__(self, t: int) -> int:
        return eval_int(self, t)


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return NotImplemented


ZERO = Polynomial._raw((0,))
ONE = Polynomial._raw((1,))
X = Polynomial._raw((0, 1))


def linear(a: int, b: int) -> Polynomial:
    """``a + b*x``."""
    return Polynomial((a, b))


# Module-level spellings of the arithmetic, mirroring the operator methods.

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def scale(p: Polynomial, c: int) -> Polynomial:
    return p.scale(c)


def shift_mul_x(p: Polynomial, k: int) -> Polynomial:
    return p.shift(k)


def eval_int(p: Polynomial, t: int) -> int:
    """Exact value at an integer point (Horner)."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def render(p: Polynomial, var: str = "x") -> str:
    """Ascending human form, e.g. ``1 + 5x + 5x^2 + x^3``."""
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


def coefficient_list(p: Polynomial) -> str:
    return "[" + ", ".join(str(c) for c in p.coeffs) + "]"


def parse_coefficient_list(text: str) -> Polynomial:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"not a coefficient list: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ZERO
    return Polynomial(int(tok) for tok in inner.split(","))


# -- closed forms -----------------------------------------------------------

@lru_cache(maxsize=None)
def fibonacci_poly(n: int) -> Polynomial:
    """``F_0 = F_1 = 1``, ``F_n = F_{n-1} + x F_{n-2}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = ONE, ONE
    for _ in range(n - 1):
        prev, cur = cur, cur + prev.shift(1)
    return cur


def path_poly(n: int) -> Polynomial:
    """Independence polynomial of ``P_n``."""
    if n < 1:
        raise ValueError("paths need n >= 1")
    return fibonacci_poly(n + 1)


def cycle_poly(n: int) -> Polynomial:
    """Independence polynomial of ``C_n``."""
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return fibonacci_poly(n - 1) + fibonacci_poly(n - 2).shift(1).scale(2)


def fibonacci_at_minus_one(k: int) -> int:
    if k < 0:
        raise ValueError("k must be non-negative")
    return _FIB_AT_MINUS_ONE[k % 6]


def value_at_minus_one_path(n: int) -> int:
    if n < 1:
        raise ValueError("paths need n >= 1")
    return fibonacci_at_minus_one(n + 1)


def value_at_minus_one_cycle(n: int) -> int:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return fibonacci_at_minus_one(n - 1) - 2 * fibonacci_at_minus_one(n - 2)


def equal_multipartite_poly(parts: int, part_size: int) -> Polynomial:
    """Independence polynomial of the complete multipartite graph with
    ``parts`` classes of ``part_size`` vertices: ``p(1+x)^a - (p-1)``."""
    if parts < 1 or part_size < 1:
        raise ValueError("parts and part_size must be positive")
    return linear(1, 1) ** part_size * parts - (parts - 1)
