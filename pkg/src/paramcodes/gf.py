"""Exact arithmetic in the finite field GF(q), q = p^k.

Prime fields represent elements as residues in [0, p).  Extension fields
(k > 1) need a user-supplied monic irreducible modulus and represent
elements as length-k coefficient tuples over GF(p), constant term first.
Every element also has a canonical integer lift (the base-p digit
encoding), which fixes the ascending element order used by all
enumerations downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence, Union

from .errors import DomainError

#: Fields larger than this are refused: everything in this package
#: enumerates K* or point sets, so huge q is never meaningful.
MAX_FIELD_ORDER = 2**16

Rep = Union[int, tuple]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, k) with p prime and q = p^k, or raise."""
    if q < 2:
        raise DomainError(f"field order must be >= 2, got {q}")
    p = None
    for d in range(2, q + 1):
        if d * d > q:
            p = q
            break
        if q % d == 0:
            p = d
            break
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise DomainError(f"{q} is not a prime power")
    return p, k


# -- polynomial helpers over GF(p), coefficients as plain int lists --------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    out = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(out) - 1 >= dm and out:
        out = _ptrim(out)
        if len(out) - 1 < dm:
            break
        c = (out[-1] * inv_lead) % p
        shift = len(out) - 1 - dm
        for i, mi in enumerate(mod):
            out[shift + i] = (out[shift + i] - c * mi) % p
        out = _ptrim(out)
    return out


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _pow_x_mod(e: int, mod: Sequence[int], p: int) -> list[int]:
    """x^e reduced modulo *mod*, by binary exponentiation."""
    result = [1]
    base = _pmod([0, 1], mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _check_irreducible(mod: Sequence[int], p: int) -> bool:
    """Monic degree-k poly is irreducible iff it shares no factor with
    x^(p^i) - x for i <= k/2 (any factorization has a factor that small)."""
    k = len(mod) - 1
    for i in range(1, k // 2 + 1):
        g = list(_pow_x_mod(p**i, mod, p))
        # subtract x
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p
        g = _ptrim(g)
        if len(_pgcd(list(mod), g, p)) - 1 > 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Description of GF(q) = GF(p^k) with cached order and modulus."""

    characteristic: int
    extension_degree: int
    modulus: Optional[tuple[int, ...]]
    order: int
    _inverse_table: dict = dataclass_field(
        default_factory=dict, repr=False, compare=False, hash=False
    )

    @classmethod
    def of(cls, q: int, modulus: Optional[Sequence[int]] = None,
           max_order: int = MAX_FIELD_ORDER) -> "FieldSpec":
        if q > max_order:
            raise DomainError(f"field order {q} exceeds the limit {max_order}")
        p, k = _factor_prime_power(q)
        if not _is_prime(p):
            raise DomainError(f"characteristic {p} is not prime")
        if k == 1:
            if modulus is not None:
                raise DomainError("modulus only applies to proper prime powers")
            return cls(p, 1, None, q)
        if modulus is None:
            raise DomainError(
                f"GF({q}) = GF({p}^{k}) needs an explicit monic irreducible "
                f"modulus of degree {k} (constant term first)")
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != k + 1:
            raise DomainError(
                f"modulus must have {k + 1} coefficients, got {len(mod)}")
        if mod[-1] != 1:
            raise DomainError("modulus must be monic")
        if not _check_irreducible(mod, p):
            raise DomainError(f"modulus {list(mod)} is reducible over GF({p})")
        return cls(p, k, mod, q)

    # -- raw-representation arithmetic -------------------------------------
    # Prime fields use int residues; extension fields use k-tuples over GF(p).

    def add(self, a: Rep, b: Rep) -> Rep:
        p = self.characteristic
        if self.extension_degree == 1:
            return (a + b) % p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: Rep, b: Rep) -> Rep:
        p = self.characteristic
        if self.extension_degree == 1:
            return (a - b) % p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: Rep) -> Rep:
        p = self.characteristic
        if self.extension_degree == 1:
            return (-a) % p
        return tuple((-x) % p for x in a)

    def mul(self, a: Rep, b: Rep) -> Rep:
        p = self.characteristic
        if self.extension_degree == 1:
            return (a * b) % p
        prod = _pmod(_pmul(list(a), list(b), p), self.modulus, p)
        return tuple(prod + [0] * (self.extension_degree - len(prod)))

    def pow(self, a: Rep, e: int) -> Rep:
        if e < 0:
            raise DomainError("exponent must be non-negative")
        result = self.one_rep
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: Rep) -> Rep:
        if a == self.zero_rep:
            raise ZeroDivisionError("inverse of zero in GF(q)")
        if self.extension_degree == 1:
            p = self.characteristic
            if p <= 4096:
                table = self._inverse_table
                if not table:
                    for x in range(1, p):
                        table[x] = pow(x, p - 2, p)
                return table[a]
            return pow(a, p - 2, p)
        return self.pow(a, self.order - 2)

    @property
    def zero_rep(self) -> Rep:
        if self.extension_degree == 1:
            return 0
        return (0,) * self.extension_degree

    @property
    def one_rep(self) -> Rep:
        if self.extension_degree == 1:
            return 1
        return (1,) + (0,) * (self.extension_degree - 1)

    def lift(self, a: Rep) -> int:
        """Canonical integer form: base-p digit encoding of the rep."""
        if self.extension_degree == 1:
            return a
        value = 0
        for digit in reversed(a):
            value = value * self.characteristic + digit
        return value

    def unlift(self, value: int) -> Rep:
        if not 0 <= value < self.order:
            raise DomainError(f"lift {value} out of range for GF({self.order})")
        if self.extension_degree == 1:
            return value
        digits = []
        for _ in range(self.extension_degree):
            digits.append(value % self.characteristic)
            value //= self.characteristic
        return tuple(digits)

    # -- element-level API --------------------------------------------------

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise DomainError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.extension_degree == 1:
                return FieldElement(self, value % self.characteristic)
            return FieldElement(self, self.unlift(value % self.order))
        rep = tuple(int(c) % self.characteristic for c in value)
        if len(rep) != self.extension_degree:
            raise DomainError(
                f"need {self.extension_degree} coefficients, got {len(rep)}")
        return FieldElement(self, rep if self.extension_degree > 1 else rep[0])

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self.zero_rep)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self.one_rep)

    def elements(self) -> list["FieldElement"]:
        """All q elements in ascending canonical (lift) order."""
        return [FieldElement(self, self.unlift(v)) for v in range(self.order)]

    def units(self) -> list["FieldElement"]:
        """The q-1 nonzero elements in ascending canonical order."""
        return [FieldElement(self, self.unlift(v)) for v in range(1, self.order)]

    def __str__(self) -> str:
        return f"GF({self.order})"


class FieldElement:
    """Immutable element of a fixed FieldSpec, compared by canonical rep."""

    __slots__ = ("spec", "rep")

    def __init__(self, spec: FieldSpec, rep: Rep):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise DomainError("operands live in different fields")
            return other
        if isinstance(other, int):
            return self.spec.element(other % self.spec.characteristic
                                     if self.spec.extension_degree > 1 else other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.rep, other.rep))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.rep, other.rep))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(other.rep, self.rep))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.rep, other.rep))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.rep, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.rep))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __bool__(self) -> bool:
        return self.rep != self.spec.zero_rep

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.rep == other.rep
        if isinstance(other, int):
            coerced = self._coerce(other)
            return self.rep == coerced.rep
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec.order, self.rep))

    def lift(self) -> int:
        return self.spec.lift(self.rep)

    def __repr__(self) -> str:
        return f"FieldElement({self.lift()} in {self.spec})"

    def __str__(self) -> str:
        return str(self.lift())
