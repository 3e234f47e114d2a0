"""Sparse multivariate polynomials over GF(q) with pluggable monomial orders.

Monomials are plain exponent tuples (one non-negative int per ring
variable); polynomials map monomials to nonzero field elements.  Three
orders are supported: Lex, GrevLex, and the block elimination order that
compares GrevLex on a leading variable block first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

from .errors import DomainError
from .gf import FieldElement, FieldSpec

Monomial = tuple  # exponent tuple, length = ring.num_vars


# -- monomial helpers --------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when t^a divides t^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(num_vars: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of the given total degree (stars and bars)."""
    if num_vars == 1:
        yield (degree,)
        return
    for head in range(degree, -1, -1):
        for tail in monomials_of_degree(num_vars - 1, degree - head):
            yield (head,) + tail


def monomials_up_to_degree(num_vars: int, degree: int) -> list[Monomial]:
    """All monomials of total degree <= degree, ascending GrevLex."""
    out: list[Monomial] = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(num_vars, d))
    key = GrevLex().key
    out.sort(key=key)
    return out


# -- monomial orders ---------------------------------------------------------

def _grevlex_key(exps: Sequence[int]) -> tuple:
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MonomialOrder:
    """Total multiplicative order with 1 minimal; subclasses supply key()."""

    def key(self, exps: Monomial) -> tuple:
        raise NotImplementedError

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, exps):
        return tuple(exps)


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class BlockElim(MonomialOrder):
    """Eliminates the first block: GrevLex on it, ties by GrevLex on the rest."""

    first_block_size: int

    def key(self, exps):
        n = self.first_block_size
        return (_grevlex_key(exps[:n]), _grevlex_key(exps[n:]))


# -- ring and polynomial -----------------------------------------------------

@dataclass(frozen=True)
class RingContext:
    """A named, ordered list of variables over a fixed field."""

    field: FieldSpec
    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise DomainError(f"duplicate variable names in {self.names}")

    @property
    def num_vars(self) -> int:
        return len(self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        c = self.field.element(c)
        zero_mono = (0,) * self.num_vars
        return Polynomial(self, {zero_mono: c} if c else {})

    def var(self, i: int) -> "Polynomial":
        exps = [0] * self.num_vars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        if len(exps) != self.num_vars:
            raise DomainError("exponent tuple length does not match ring")
        c = self.field.element(coeff)
        return Polynomial(self, {tuple(int(e) for e in exps): c} if c else {})

    def with_extra_variable(self, name: str) -> "RingContext":
        return RingContext(self.field, self.names + (name,))

    def drop_first(self, k: int) -> "RingContext":
        return RingContext(self.field, self.names[k:])

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.names)}]"


class Polynomial:
    """Immutable sparse polynomial: dict from exponent tuple to nonzero coeff."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms: Mapping[Monomial, FieldElement]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise DomainError("polynomials live in different rings")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            acc = c if acc is None else acc + c
            if acc:
                terms[m] = acc
            elif m in terms:
                del terms[m]
        return Polynomial(self.ring, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            acc = -c if acc is None else acc - c
            if acc:
                terms[m] = acc
            elif m in terms:
                del terms[m]
        return Polynomial(self.ring, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, FieldElement)):
            c = self.ring.field.element(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})
        self._check_ring(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc = terms.get(m)
                prod = c1 * c2
                acc = prod if acc is None else acc + prod
                if acc:
                    terms[m] = acc
                elif m in terms:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring.names, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading_term(self, order: MonomialOrder) -> tuple[Monomial, FieldElement]:
        if not self.terms:
            raise DomainError("the zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        if lc == self.ring.field.one:
            return self
        inv = lc.inv()
        return Polynomial(self.ring, {m: c * inv for m, c in self.terms.items()})

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        if len(point) != self.ring.num_vars:
            raise DomainError(
                f"point has {len(point)} coordinates, ring has {self.ring.num_vars}")
        spec = self.ring.field
        total = spec.zero_rep
        for m, c in self.terms.items():
            value = c.rep
            for coord, e in zip(point, m):
                if e:
                    value = spec.mul(value, spec.pow(coord.rep, e))
            total = spec.add(total, value)
        return FieldElement(spec, total)

    def sorted_terms(self, order: MonomialOrder, reverse: bool = True):
        key = order.key
        for m in sorted(self.terms, key=key, reverse=reverse):
            yield m, self.terms[m]

    # -- text form ------------------------------------------------------------

    def format(self, order: Optional[MonomialOrder] = None) -> str:
        """Render terms descending by *order*; coefficient -1 prints as a minus."""
        if not self.terms:
            return "0"
        order = order or GrevLex()
        spec = self.ring.field
        minus_one = spec.neg(spec.one_rep)
        parts: list[str] = []
        for m, c in self.sorted_terms(order):
            body = self._format_mono(m)
            if c.rep == minus_one and spec.characteristic > 2:
                sign, mag = "-", body or "1"
            elif c == spec.one:
                sign, mag = "+", body or "1"
            else:
                sign = "+"
                mag = f"{c.lift()}*{body}" if body else str(c.lift())
            if not parts:
                parts.append(mag if sign == "+" else f"-{mag}")
            else:
                parts.append(f"{sign} {mag}")
        return " ".join(parts)

    def _format_mono(self, m: Monomial) -> str:
        pieces = []
        for name, e in zip(self.ring.names, m):
            if e == 1:
                pieces.append(name)
            elif e > 1:
                pieces.append(f"{name}^{e}")
        return "*".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()})"


# -- free functions ------------------------------------------------------------

def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder
           ) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: f = sum(q_i * g_i) + r.

    No monomial of r is divisible by any divisor's leading monomial, and
    each q_i*g_i has leading monomial <= that of f.  Ties between eligible
    divisors go to the earliest one in the list.
    """
    quotients, remainder = _divide_impl(f, divisors, order, want_quotients=True)
    return quotients, remainder


def reduce_mod(f: Polynomial, divisors: Sequence[Polynomial],
               order: MonomialOrder) -> Polynomial:
    """Remainder of the division of f by the divisor list."""
    return _divide_impl(f, divisors, order, want_quotients=False)[1]


def _divide_impl(f, divisors, order, want_quotients):
    if any(not g for g in divisors):
        raise DomainError("division by the zero polynomial")
    for g in divisors:
        f._check_ring(g)
    ring = f.ring
    if not divisors:
        return ([], f) if want_quotients else (None, f)

    key = order.key
    data = []
    for g in divisors:
        lm, lc = g.leading_term(order)
        data.append((g.terms, lm, lc.inv()))

    work = dict(f.terms)
    rem: dict = {}
    quots: Optional[list[dict]] = [dict() for _ in divisors] if want_quotients else None
    while work:
        m = max(work, key=key)
        c = work[m]
        for i, (gterms, glm, glc_inv) in enumerate(data):
            if mono_divides(glm, m):
                qc = c * glc_inv
                qm = mono_div(m, glm)
                for gm, gc in gterms.items():
                    mm = mono_mul(gm, qm)
                    acc = work.get(mm)
                    delta = qc * gc
                    acc = -delta if acc is None else acc - delta
                    if acc:
                        work[mm] = acc
                    elif mm in work:
                        del work[mm]
                if quots is not None:
                    prev = quots[i].get(qm)
                    quots[i][qm] = qc if prev is None else prev + qc
                break
        else:
            rem[m] = c
            del work[m]
    remainder = Polynomial(ring, rem)
    if want_quotients:
        return [Polynomial(ring, q) for q in quots], remainder
    return None, remainder


def homogenize(f: Polynomial, target_degree: int, hom_var: int) -> Polynomial:
    """Pad every term with hom_var so all terms reach target_degree."""
    deg = f.degree()
    if deg > target_degree:
        raise DomainError(
            f"target degree {target_degree} below polynomial degree {deg}")
    if any(m[hom_var] for m in f.terms):
        raise DomainError("homogenization variable already occurs in the polynomial")
    terms = {}
    for m, c in f.terms.items():
        padded = list(m)
        padded[hom_var] = target_degree - sum(m)
        terms[tuple(padded)] = c
    return Polynomial(f.ring, terms)


def dehomogenize(f: Polynomial, hom_var: int) -> Polynomial:
    """Set hom_var = 1 (exponent dropped, terms merged)."""
    terms: dict = {}
    for m, c in f.terms.items():
        flat = list(m)
        flat[hom_var] = 0
        flat = tuple(flat)
        acc = terms.get(flat)
        acc = c if acc is None else acc + c
        if acc:
            terms[flat] = acc
        elif flat in terms:
            del terms[flat]
    return Polynomial(f.ring, terms)


def append_variable(f: Polynomial, extended: RingContext) -> Polynomial:
    """Re-tag f into a ring with one extra trailing variable (exponent 0)."""
    if extended.names[:-1] != f.ring.names or extended.field != f.ring.field:
        raise DomainError("extended ring does not extend the polynomial's ring")
    return Polynomial(extended, {m + (0,): c for m, c in f.terms.items()})


def restrict_variables(f: Polynomial, smaller: RingContext, drop_first: int) -> Polynomial:
    """Re-tag f into the subring obtained by dropping the first variables."""
    if smaller.names != f.ring.names[drop_first:] or smaller.field != f.ring.field:
        raise DomainError("target ring is not the expected subring")
    terms = {}
    for m, c in f.terms.items():
        if any(m[:drop_first]):
            raise DomainError("polynomial involves a dropped variable")
        terms[m[drop_first:]] = c
    return Polynomial(smaller, terms)
