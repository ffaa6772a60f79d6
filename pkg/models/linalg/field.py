import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from random import Random
from typing import Any, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ

from app.errors import InvalidFormatError, InvalidParameterValueError

_SCALAR_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@lru_cache(maxsize=None)
def _domain(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class Field:
    """
    Coefficient field: the rationals (characteristic 0) or GF(p).

    Scalars are elements of the matching sympy domain, so every matrix built
    over a Field is a `DomainMatrix` over `QQ` or `GF(p)`. Rationals are kept
    in lowest terms with positive denominator; residues lie in [0, p).
    """
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise InvalidParameterValueError(f"Modulus {self.characteristic} is not prime.")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @classmethod
    def parse(cls, spec: Union[str, dict, "Field"]) -> "Field":
        """
        Accepts "Q", "QQ", "Fp:5", "F5", "GF(5)" or the JSON forms "Q" and {"Fp": 5}.
        """
        if isinstance(spec, Field):
            return spec
        if isinstance(spec, dict):
            if set(spec) != {"Fp"}:
                raise InvalidFormatError(f"Unrecognized field descriptor: {spec}")
            return cls.prime(spec["Fp"])
        text = str(spec).strip().upper()
        if text in ("Q", "QQ"):
            return cls.rationals()
        match = re.fullmatch(r"FP:(\d+)|F(\d+)|GF\((\d+)\)", text)
        if not match:
            raise InvalidFormatError(f"Unrecognized field: {spec!r}")
        return cls.prime(int(next(g for g in match.groups() if g is not None)))

    @property
    def domain(self):
        return _domain(self.characteristic)

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def to_json(self) -> Union[str, dict]:
        return "Q" if self.characteristic == 0 else {"Fp": self.characteristic}

    def element(self, value: Any):
        """Convert an int, Fraction, "p/q" string or domain element to a scalar of this field."""
        K = self.domain
        if K.of_type(value):
            return value
        if isinstance(value, bool):
            raise InvalidFormatError(f"Boolean is not a scalar: {value!r}")
        if isinstance(value, int):
            return K(value)
        if isinstance(value, Fraction):
            return self._ratio(value.numerator, value.denominator)
        if isinstance(value, str):
            match = _SCALAR_PATTERN.match(value)
            if not match:
                raise InvalidFormatError(f"Invalid scalar string: {value!r}")
            numerator = int(match.group(1))
            denominator = int(match.group(2)) if match.group(2) else 1
            return self._ratio(numerator, denominator)
        raise InvalidFormatError(f"Unsupported scalar value: {value!r}")

    def _ratio(self, numerator: int, denominator: int):
        if denominator == 0:
            raise InvalidFormatError("Zero denominator in scalar.")
        if self.characteristic == 0:
            return QQ(numerator, denominator)
        if denominator % self.characteristic == 0:
            raise InvalidFormatError(
                f"Denominator {denominator} is not invertible modulo {self.characteristic}."
            )
        return self.domain(numerator) / self.domain(denominator)

    def to_fraction(self, a) -> Fraction:
        if self.characteristic == 0:
            return Fraction(int(QQ.numer(a)), int(QQ.denom(a)))
        return Fraction(int(a) % self.characteristic)

    def to_str(self, a) -> str:
        """Canonical string: "p/q" or an integer string for rationals, the residue for GF(p)."""
        value = self.to_fraction(a)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def random_element(self, rng: Random, bound: int = 3):
        return self.element(rng.randint(-bound, bound))

    def __str__(self) -> str:
        return self.label
