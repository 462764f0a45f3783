"""Sparse multivariate polynomials over exact coefficient fields.

A polynomial is a dict from exponent tuples to nonzero coefficients.  Two
coefficient fields are supported and never mixed:

* the rationals, stored as ``fractions.Fraction`` (``mod`` is None), and
* a prime field GF(p), stored as canonical ints in [0, p) (``mod`` is p).

``Fraction`` keeps rationals in lowest terms with positive denominator, so
the scalar invariants hold by construction.  Everything here is immutable
and pure; values can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatch, NotHomogeneous
from .orders import GREVLEX, MonomialOrder

Exponent = tuple[int, ...]


def monomial_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Exponent, b: Exponent) -> Exponent | None:
    """a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Exponent) -> int:
    return sum(a)


class MPoly:
    __slots__ = ("nvars", "mod", "terms", "_hash")

    def __init__(self, nvars: int, terms=None, mod: int | None = None):
        self.nvars = nvars
        self.mod = mod
        clean: dict[Exponent, object] = {}
        if terms:
            if mod is None:
                for e, c in terms.items():
                    c = c if isinstance(c, Fraction) else Fraction(c)
                    if c != 0:
                        clean[e] = c
            else:
                for e, c in terms.items():
                    c = int(c) % mod
                    if c:
                        clean[e] = c
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, mod: int | None = None) -> "MPoly":
        return cls(nvars, None, mod)

    @classmethod
    def const(cls, nvars: int, c, mod: int | None = None) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c}, mod)

    @classmethod
    def variable(cls, i: int, nvars: int, mod: int | None = None) -> "MPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, mod)

    @classmethod
    def monomial(cls, exp: Exponent, c=1, mod: int | None = None) -> "MPoly":
        return cls(len(exp), {tuple(exp): c}, mod)

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> int | None:
        """The common total degree of all terms, or None if they differ.

        The zero polynomial counts as homogeneous of degree 0.
        """
        if not self.terms:
            return 0
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def homogeneous_degree(self) -> int:
        d = self.is_homogeneous()
        if d is None:
            raise NotHomogeneous(f"polynomial is not homogeneous: {self}")
        return d

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        zero = (0,) * self.nvars
        if self.terms and set(self.terms) != {zero}:
            raise ValueError("polynomial is not constant")
        default = Fraction(0) if self.mod is None else 0
        return self.terms.get(zero, default)

    def _check_compatible(self, other: "MPoly"):
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )
        if self.mod != other.mod:
            raise FieldMismatch(f"coefficient fields differ: {self.mod} vs {other.mod}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other, self.mod)
        self._check_compatible(other)
        out = dict(self.terms)
        mod = self.mod
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if mod is not None:
                s %= mod
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        r = MPoly.__new__(MPoly)
        r.nvars, r.mod, r.terms, r._hash = self.nvars, mod, out, None
        return r

    __radd__ = __add__

    def __neg__(self):
        mod = self.mod
        if mod is None:
            out = {e: -c for e, c in self.terms.items()}
        else:
            out = {e: mod - c for e, c in self.terms.items()}
        r = MPoly.__new__(MPoly)
        r.nvars, r.mod, r.terms, r._hash = self.nvars, mod, out, None
        return r

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other, self.mod)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check_compatible(other)
        mod = self.mod
        out: dict[Exponent, object] = {}
        # iterate over the shorter operand for fewer dict rebuilds
        a, b = (self.terms, other.terms)
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if mod is not None:
                    s %= mod
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        r = MPoly.__new__(MPoly)
        r.nvars, r.mod, r.terms, r._hash = self.nvars, mod, out, None
        return r

    __rmul__ = __mul__

    def scale(self, c):
        mod = self.mod
        if mod is None:
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c == 0:
                return MPoly.zero(self.nvars)
            out = {e: k * c for e, k in self.terms.items()}
        else:
            c = int(c) % mod
            if c == 0:
                return MPoly.zero(self.nvars, mod)
            out = {e: (k * c) % mod for e, k in self.terms.items()}
            out = {e: k for e, k in out.items() if k}
        r = MPoly.__new__(MPoly)
        r.nvars, r.mod, r.terms, r._hash = self.nvars, mod, out, None
        return r

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = MPoly.const(self.nvars, 1, self.mod)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return (
                self.nvars == other.nvars
                and self.mod == other.mod
                and self.terms == other.terms
            )
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.nvars, other, self.mod)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.mod, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and order-dependent views ----------------------------------

    def derivative(self, i: int) -> "MPoly":
        """Formal partial derivative with respect to variable i."""
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        mod = self.mod
        out: dict[Exponent, object] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            ne = e[:i] + (k - 1,) + e[i + 1 :]
            s = out.get(ne, 0) + c * k
            if mod is not None:
                s %= mod
            if s:
                out[ne] = s
            elif ne in out:
                del out[ne]
        r = MPoly.__new__(MPoly)
        r.nvars, r.mod, r.terms, r._hash = self.nvars, mod, out, None
        return r

    def lead_monomial(self, order: MonomialOrder = GREVLEX) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max(self.terms, key=order.key)

    def lead_coeff(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.lead_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "MPoly":
        if not self.terms:
            return self
        c = self.lead_coeff(order)
        if self.mod is None:
            return self.scale(Fraction(1) / c)
        return self.scale(pow(c, self.mod - 2, self.mod))

    def sorted_terms(self, order: MonomialOrder = GREVLEX, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    def coefficient(self, exp: Exponent):
        default = Fraction(0) if self.mod is None else 0
        return self.terms.get(tuple(exp), default)

    # -- field changes -------------------------------------------------------

    def reduce_mod(self, p: int) -> "MPoly":
        """Coefficient-wise image in GF(p); fails on non-invertible denominators."""
        if self.mod is not None:
            raise FieldMismatch("polynomial is already over a prime field")
        out = {}
        for e, c in self.terms.items():
            den = c.denominator % p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator {c.denominator} not invertible modulo {p}"
                )
            v = (c.numerator % p) * pow(den, p - 2, p) % p
            if v:
                out[e] = v
        r = MPoly.__new__(MPoly)
        r.nvars, r.mod, r.terms, r._hash = self.nvars, p, out, None
        return r

    def evaluate(self, point):
        """Evaluate at a point (one scalar per variable), exactly."""
        if len(point) != self.nvars:
            raise ValueError("point length must equal the variable count")
        total = Fraction(0) if self.mod is None else 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x**k
            total += term
        if self.mod is not None:
            total %= self.mod
        return total

    # -- printing ------------------------------------------------------------

    def to_string(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        pieces = []
        for e, c in self.sorted_terms():
            factors = [
                names[i] if k == 1 else f"{names[i]}^{k}"
                for i, k in enumerate(e)
                if k
            ]
            neg = c < 0
            mag = -c if neg else c
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            pieces.append(("- " if neg else "+ ") + body)
        head = pieces[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return head + ("" if len(pieces) == 1 else " " + " ".join(pieces[1:]))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        field = "QQ" if self.mod is None else f"GF({self.mod})"
        return f"MPoly({self.to_string()!r}, {field})"


def apply_coefficients(coeffs: list[MPoly], p: MPoly) -> MPoly:
    """Apply the derivation sum(coeffs[i] * d/dx_i) to p."""
    if len(coeffs) != p.nvars:
        raise ValueError(
            f"derivation has {len(coeffs)} coefficients, polynomial has {p.nvars} variables"
        )
    out = MPoly.zero(p.nvars, p.mod)
    for i, a in enumerate(coeffs):
        if a.is_zero():
            continue
        out = out + a * p.derivative(i)
    return out


def euler_coefficients(nvars: int, mod: int | None = None) -> list[MPoly]:
    return [MPoly.variable(i, nvars, mod) for i in range(nvars)]


# -- gcd and squarefreeness over the rationals --------------------------------


def exact_div(p: MPoly, d: MPoly) -> MPoly | None:
    """p / d when d divides p exactly, else None.  Any field."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return MPoly.zero(p.nvars, p.mod)
    p._check_compatible(d)
    order = GREVLEX
    lm_d = d.lead_monomial(order)
    lc_d = d.lead_coeff(order)
    mod = p.mod
    inv_lc = (Fraction(1) / lc_d) if mod is None else pow(lc_d, mod - 2, mod)
    rem = dict(p.terms)
    quo: dict[Exponent, object] = {}
    while rem:
        m = max(rem, key=order.key)
        q = monomial_div(m, lm_d)
        if q is None:
            return None
        c = rem[m] * inv_lc
        if mod is not None:
            c %= mod
        quo[q] = c
        for e, k in d.terms.items():
            ne = tuple(x + y for x, y in zip(q, e))
            s = rem.get(ne, 0) - c * k
            if mod is not None:
                s %= mod
            if s:
                rem[ne] = s
            elif ne in rem:
                del rem[ne]
    return MPoly(p.nvars, quo, mod)


def divides(d: MPoly, p: MPoly) -> bool:
    return exact_div(p, d) is not None


def content_free(p: MPoly) -> MPoly:
    """Scale to integer coefficients with content 1 and positive lead."""
    if p.is_zero() or p.mod is not None:
        return p
    from math import gcd, lcm

    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    nums = [int(c * den) for c in p.terms.values()]
    g = 0
    for v in nums:
        g = gcd(g, v)
    scale = Fraction(den, g)
    q = p.scale(scale)
    if q.lead_coeff() < 0:
        q = -q
    return q


def _main_degree(p: MPoly, v: int) -> int:
    return max((e[v] for e in p.terms), default=-1)


def _coeffs_in(p: MPoly, v: int) -> dict[int, MPoly]:
    """View p as a univariate polynomial in x_v with MPoly coefficients."""
    buckets: dict[int, dict[Exponent, object]] = {}
    for e, c in p.terms.items():
        k = e[v]
        re = e[:v] + (0,) + e[v + 1 :]
        buckets.setdefault(k, {})[re] = c
    return {k: MPoly(p.nvars, t, p.mod) for k, t in buckets.items()}


def _from_coeffs(coeffs: dict[int, MPoly], v: int, nvars: int) -> MPoly:
    out: dict[Exponent, object] = {}
    for k, q in coeffs.items():
        for e, c in q.terms.items():
            out[e[:v] + (k,) + e[v + 1 :]] = c
    return MPoly(nvars, out)


def _pseudo_rem(p: MPoly, q: MPoly, v: int) -> MPoly:
    """Pseudo-remainder of p by q with respect to the main variable v."""
    dq = _main_degree(q, v)
    qc = _coeffs_in(q, v)
    lead_q = qc[dq]
    r = p
    while not r.is_zero() and _main_degree(r, v) >= dq:
        dr = _main_degree(r, v)
        rc = _coeffs_in(r, v)
        lead_r = rc[dr]
        shift = MPoly.variable(v, p.nvars) ** (dr - dq)
        r = lead_q * r - lead_r * shift * q
    return r


def mpoly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """GCD over the rationals, normalised content-free with positive lead.

    Primitive pseudo-remainder sequences on the variable of lowest degree;
    recursion bottoms out on constants.
    """
    if p.mod is not None or q.mod is not None:
        raise FieldMismatch("gcd is implemented over the rationals only")
    if p.is_zero():
        return content_free(q)
    if q.is_zero():
        return content_free(p)
    if p.is_constant() or q.is_constant():
        return MPoly.const(p.nvars, 1)
    used = [v for v in range(p.nvars) if _main_degree(p, v) > 0 or _main_degree(q, v) > 0]
    v = min(used, key=lambda i: max(_main_degree(p, i), _main_degree(q, i)))

    def content_and_primitive(f: MPoly) -> tuple[MPoly, MPoly]:
        coeffs = list(_coeffs_in(f, v).values())
        cont = coeffs[0]
        for c in coeffs[1:]:
            cont = mpoly_gcd(cont, c)
            if cont.is_constant():
                cont = MPoly.const(f.nvars, 1)
                break
        prim = exact_div(f, cont)
        assert prim is not None
        return cont, prim

    if _main_degree(p, v) == 0:
        cq, _ = content_and_primitive(q)
        return content_free(mpoly_gcd(p, cq))
    if _main_degree(q, v) == 0:
        cp, _ = content_and_primitive(p)
        return content_free(mpoly_gcd(q, cp))

    cp, a = content_and_primitive(p)
    cq, b = content_and_primitive(q)
    cont = mpoly_gcd(cp, cq)
    if _main_degree(a, v) < _main_degree(b, v):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b, v)
        a = b
        if r.is_zero():
            b = r
        else:
            _, b = content_and_primitive(content_free(r))
    if _main_degree(a, v) == 0:
        a = MPoly.const(p.nvars, 1)
    return content_free(cont * a)


def is_squarefree(p: MPoly) -> bool:
    """True iff p has no repeated factor (exact, rationals only)."""
    if p.mod is not None:
        raise FieldMismatch("squarefreeness is decided over the rationals")
    if p.is_zero():
        return False
    g = content_free(p)
    for i in range(p.nvars):
        di = p.derivative(i)
        if di.is_zero():
            continue
        g = mpoly_gcd(g, di)
        if g.is_constant():
            return True
    return g.is_constant()
