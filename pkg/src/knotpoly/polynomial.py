"""Exact integer-coefficient Laurent polynomials in a fixed ordered variable set.

A polynomial is a map from exponent vectors (tuples of ints, possibly
negative) to nonzero integer coefficients, tagged with its ring: an ordered
tuple of variable names such as ``('A',)`` or ``('z', 'a')``.  Coefficients
are plain Python ints, so nothing ever overflows or rounds.

Canonical form: no stored zero coefficients; display order is lexicographic
descending by exponent vector, e.g. ``-A^5 - A^-3 + A^-7``.

Values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, RingMismatchError

__all__ = [
    "LaurentPoly",
    "lp_add",
    "lp_mul",
    "lp_substitute",
    "lp_mirror",
    "poly_to_text",
    "poly_from_text",
    "poly_to_json",
    "poly_from_json",
    "divexact",
]


class LaurentPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms=None):
        self.ring = tuple(ring)
        arity = len(self.ring)
        clean = {}
        if terms:
            for exps, coeff in terms.items() if hasattr(terms, "items") else terms:
                if coeff == 0:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != arity:
                    raise ValueError(
                        f"exponent vector {exps} has arity {len(exps)}, ring has {arity}"
                    )
                clean[exps] = clean.get(exps, 0) + int(coeff)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c != 0})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        if name in self.__slots__ and getattr(self, "_hash", "unset") != "unset":
            raise AttributeError("LaurentPoly is immutable")
        object.__setattr__(self, name, value)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def one(cls, ring):
        return cls(ring, {(0,) * len(tuple(ring)): 1})

    @classmethod
    def const(cls, ring, c):
        return cls(ring, {(0,) * len(tuple(ring)): c})

    @classmethod
    def monomial(cls, ring, coeff, exps):
        return cls(ring, {tuple(exps): coeff})

    @classmethod
    def var(cls, ring, name, power=1, coeff=1):
        ring = tuple(ring)
        exps = [0] * len(ring)
        exps[ring.index(name)] = power
        return cls(ring, {tuple(exps): coeff})

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit_monomial(self):
        """Single term with coefficient +1 or -1 (invertible in the ring)."""
        if len(self.terms) != 1:
            return False
        return abs(next(iter(self.terms.values()))) == 1

    def sorted_terms(self):
        """Terms in canonical order: lexicographic descending exponent vector."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring {self.ring} vs {other.ring}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.ring, other)
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        self._check_ring(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            if not self.is_unit_monomial():
                raise ValueError("negative power of a non-unit polynomial")
            (exps, coeff), = self.terms.items()
            inv = LaurentPoly(self.ring, {tuple(-e for e in exps): coeff})
            return inv ** (-n)
        result = LaurentPoly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == LaurentPoly.const(self.ring, other)
        return (
            isinstance(other, LaurentPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, tuple(self.sorted_terms())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"LaurentPoly({self.ring!r}, {poly_to_text(self)!r})"

    def __str__(self):
        return poly_to_text(self)


# -- spec-level operation aliases --------------------------------------


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_substitute(p: LaurentPoly, var: str, image: LaurentPoly) -> LaurentPoly:
    """Replace ``var**k`` by ``image**k`` throughout ``p``.

    ``p`` must be univariate in ``var`` and ``image`` a single-term monomial
    with coefficient +-1 (so every power, including negative ones, stays a
    Laurent monomial).  The result lives in ``image``'s ring.
    """
    if p.ring != (var,):
        if var not in p.ring:
            raise RingMismatchError(f"variable {var!r} not in ring {p.ring}")
        raise ValueError("substitution requires a univariate source polynomial")
    if not image.is_unit_monomial():
        raise ValueError("substitution image must be a monomial with coefficient +-1")
    out = LaurentPoly.zero(image.ring)
    for (k,), c in p.terms.items():
        out = out + (image ** k) * c
    return out


def lp_mirror(p: LaurentPoly, var: str) -> LaurentPoly:
    """Negate the ``var`` exponent of every term (var -> var^-1)."""
    if var not in p.ring:
        raise RingMismatchError(f"variable {var!r} not in ring {p.ring}")
    i = p.ring.index(var)
    out = {}
    for exps, c in p.terms.items():
        e = list(exps)
        e[i] = -e[i]
        out[tuple(e)] = c
    return LaurentPoly(p.ring, out)


# -- text form ----------------------------------------------------------


def _term_text(ring, exps, coeff):
    factors = []
    for name, e in zip(ring, exps):
        if e == 0:
            continue
        factors.append(name if e == 1 else f"{name}^{e}")
    mag = abs(coeff)
    if not factors:
        return str(mag)
    if mag != 1:
        factors.insert(0, str(mag))
    return "*".join(factors)


def poly_to_text(p: LaurentPoly) -> str:
    """Canonical text: ``c*v^k`` terms joined by signs, descending order."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (exps, coeff) in enumerate(p.sorted_terms()):
        body = _term_text(p.ring, exps, coeff)
        if i == 0:
            parts.append(("-" if coeff < 0 else "") + body)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(parts)


def poly_to_text_scaled(p: LaurentPoly, out_var: str, denom: int) -> str:
    """Render a univariate polynomial with exponents divided by ``denom``.

    Used to display the Jones polynomial over t when computed over u with
    u^denom = t; non-integer exponents render as reduced fractions.
    """
    if len(p.ring) != 1:
        raise ValueError("scaled rendering requires a univariate polynomial")
    if p.is_zero():
        return "0"
    parts = []
    for i, ((e,), coeff) in enumerate(p.sorted_terms()):
        q = Fraction(e, denom)
        if q == 0:
            body = str(abs(coeff))
        else:
            exp = "" if q == 1 else ("^" + (str(q.numerator) if q.denominator == 1 else f"({q})"))
            body = out_var + exp
            if abs(coeff) != 1:
                body = f"{abs(coeff)}*{body}"
        if i == 0:
            parts.append(("-" if coeff < 0 else "") + body)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(parts)


def poly_from_text(text: str, ring) -> LaurentPoly:
    """Parse the canonical text form (term order and spacing are free).

    Grammar per term: ``[sign] factor (* factor)*`` where a factor is an
    integer or ``var`` or ``var^int``.  Raises ParseError with an offset.
    """
    ring = tuple(ring)
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text", position=0)
    terms = []
    i, n = 0, len(s)

    def skip_ws(j):
        while j < n and s[j].isspace():
            j += 1
        return j

    def read_int(j):
        k = j
        if k < n and s[k] in "+-":
            k += 1
        if k >= n or not s[k].isdigit():
            raise ParseError("expected integer", position=j)
        while k < n and s[k].isdigit():
            k += 1
        return int(s[j:k]), k

    def read_name(j):
        k = j
        while k < n and (s[k].isalpha() or s[k] == "_"):
            k += 1
        if k == j:
            raise ParseError("expected variable name or integer", position=j)
        return s[j:k], k

    first = True
    while True:
        i = skip_ws(i)
        if i >= n:
            if first:
                raise ParseError("empty polynomial text", position=i)
            break
        sign = 1
        if s[i] in "+-":
            if first and s[i] == "+":
                raise ParseError("unexpected leading '+'", position=i)
            sign = -1 if s[i] == "-" else 1
            i = skip_ws(i + 1)
        elif not first:
            raise ParseError("expected '+' or '-' between terms", position=i)
        coeff = sign
        exps = [0] * len(ring)
        saw_factor = False
        while True:
            if i < n and s[i].isdigit():
                val, i = read_int(i)
                coeff *= val
            else:
                name, i = read_name(i)
                if name not in ring:
                    raise ParseError(f"unknown variable {name!r}", position=i - len(name))
                e = 1
                if i < n and s[i] == "^":
                    e, i = read_int(i + 1)
                exps[ring.index(name)] += e
            saw_factor = True
            j = skip_ws(i)
            if j < n and s[j] == "*":
                i = skip_ws(j + 1)
                continue
            i = j
            break
        if not saw_factor:
            raise ParseError("empty term", position=i)
        terms.append((tuple(exps), coeff))
        first = False
    return LaurentPoly(ring, terms)


# -- JSON form ----------------------------------------------------------


def poly_to_json(p: LaurentPoly):
    """List of [exponent-vector, coefficient] pairs in canonical order."""
    return [[list(e), c] for e, c in p.sorted_terms()]


def poly_from_json(ring, data) -> LaurentPoly:
    return LaurentPoly(ring, {tuple(e): c for e, c in data})


# -- exact division -----------------------------------------------------


def divexact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact division of univariate Laurent polynomials; raises if inexact.

    Needed to check identities like L(A+A^-1, -A^3) = <K>, where a power of
    a binomial must divide out with zero remainder.
    """
    if len(p.ring) != 1 or p.ring != q.ring:
        raise RingMismatchError("exact division requires matching univariate rings")
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    plo = min(e for (e,) in p.terms)
    phi = max(e for (e,) in p.terms)
    qlo = min(e for (e,) in q.terms)
    qhi = max(e for (e,) in q.terms)
    num = [0] * (phi - plo + 1)
    for (e,), c in p.terms.items():
        num[e - plo] = c
    den = [0] * (qhi - qlo + 1)
    for (e,), c in q.terms.items():
        den[e - qlo] = c
    if len(num) < len(den):
        raise ValueError("inexact Laurent division")
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        lead = num[k + len(den) - 1]
        if lead % den[-1] != 0:
            raise ValueError("inexact Laurent division")
        quot[k] = lead // den[-1]
        if quot[k]:
            for j, d in enumerate(den):
                num[k + j] -= quot[k] * d
    if any(num):
        raise ValueError("inexact Laurent division")
    shift = plo - qlo
    return LaurentPoly(p.ring, {(k + shift,): c for k, c in enumerate(quot) if c})
