"""Scalar domains: prime fields, rationals and complex doubles.

Scalars are plain Python values (``int`` in ``[0, p)``, ``Fraction``,
``complex``); a :class:`Field` knows how to combine and serialize them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

#: Relative threshold below which a complex quantity counts as zero.
COMPLEX_TOL = 1e-9

_MAX_PRIME = 2**31


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field: ``Field.prime(p)``, ``Field.rationals()`` or ``Field.complex()``."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Fp", "Q", "C"):
            raise FieldError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp":
            if not (is_prime(self.p) and self.p < _MAX_PRIME):
                raise FieldError(f"p must be a prime below 2**31, got {self.p}")
        elif self.p:
            raise FieldError("only prime fields carry p")

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls("Fp", p)

    @classmethod
    def rationals(cls) -> "Field":
        return cls("Q")

    @classmethod
    def complex(cls) -> "Field":
        return cls("C")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``"Fp:7"``, ``"Q"`` or ``"C"``."""
        text = text.strip()
        if text in ("Q", "C"):
            return cls(text)
        if text.startswith("Fp:"):
            try:
                return cls.prime(int(text[3:]))
            except ValueError as exc:
                raise FieldError(f"bad field spec {text!r}") from exc
        raise FieldError(f"bad field spec {text!r}")

    def __str__(self) -> str:
        return f"Fp:{self.p}" if self.kind == "Fp" else self.kind

    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    @property
    def is_exact(self) -> bool:
        return self.kind != "C"

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    def elements(self):
        """All elements of a prime field, in order 0..p-1."""
        if self.kind != "Fp":
            raise FieldError(f"{self} is infinite")
        return range(self.p)

    # -- arithmetic -------------------------------------------------------

    @property
    def zero(self):
        return {"Fp": 0, "Q": Fraction(0), "C": 0j}[self.kind]

    @property
    def one(self):
        return {"Fp": 1, "Q": Fraction(1), "C": 1 + 0j}[self.kind]

    def from_int(self, n: int):
        if self.kind == "Fp":
            return n % self.p
        if self.kind == "Q":
            return Fraction(n)
        return complex(n)

    def coerce(self, x):
        """Bring an int, Fraction, float/complex or ``"a/b"`` string into the field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.kind == "Fp":
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise FieldError(f"{x} has no image in {self}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            if isinstance(x, (int,)) and not isinstance(x, bool):
                return x % self.p
            if isinstance(x, bool):
                return int(x)
            raise FieldError(f"cannot coerce {x!r} into {self}")
        if self.kind == "Q":
            if isinstance(x, (complex, float)):
                raise FieldError(f"cannot coerce inexact {x!r} into Q")
            return Fraction(x)
        return complex(x)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "Fp" else a - b

    def mul(self, a, b):
        return a * b % self.p if self.kind == "Fp" else a * b

    def neg(self, a):
        return -a % self.p if self.kind == "Fp" else -a

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError(f"zero is not invertible in {self}")
        if self.kind == "Fp":
            return pow(a, self.p - 2, self.p)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a, scale: float = 1.0) -> bool:
        """Exact test, or ``|a| <= COMPLEX_TOL * scale`` for complex scalars."""
        if self.kind == "C":
            return abs(a) <= COMPLEX_TOL * scale
        return a == 0

    def eq(self, a, b, scale: float = 1.0) -> bool:
        return self.is_zero(self.sub(a, b), scale)

    def int_is_invertible(self, n: int) -> bool:
        """Whether the integer ``n`` is nonzero in this field."""
        return n % self.p != 0 if self.kind == "Fp" else n != 0

    def random(self, rng: random.Random):
        if self.kind == "Fp":
            return rng.randrange(self.p)
        if self.kind == "Q":
            return Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        return complex(rng.uniform(-2, 2), rng.uniform(-2, 2))

    # -- serialization ----------------------------------------------------

    def to_json(self, a):
        if self.kind == "Fp":
            return int(a)
        if self.kind == "Q":
            a = Fraction(a)
            return f"{a.numerator}/{a.denominator}"
        a = complex(a)
        return [_round12(a.real), _round12(a.imag)]

    def from_json(self, obj):
        if self.kind == "C":
            if isinstance(obj, (list, tuple)):
                if len(obj) != 2:
                    raise FieldError(f"complex scalar must be [re, im], got {obj!r}")
                return complex(float(obj[0]), float(obj[1]))
            if isinstance(obj, (int, float)):
                return complex(obj)
            raise FieldError(f"bad complex scalar {obj!r}")
        if isinstance(obj, (list, tuple, float)) or isinstance(obj, bool):
            raise FieldError(f"bad scalar {obj!r} for {self}")
        try:
            return self.coerce(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad scalar {obj!r} for {self}") from exc


def _round12(x: float) -> float:
    """Round to 12 significant digits; normalizes ``-0.0``."""
    r = float(f"{x:.12g}")
    return 0.0 if r == 0 else r
