"""Groebner bases and ideal-theoretic primitives.

Buchberger's algorithm with Gebauer-Moller pair elimination and the normal
selection strategy.  Deliberately not F4/F5: inputs are desk scale (a
handful of variables, moderate degrees) and auditability wins.

The engine works on raw term dicts with monic basis elements; ``MPoly``
appears only at the API boundary.  Quotients and intersections use the
one-extra-variable trick; saturation iterates ideal quotients and checks
stabilisation by reduced-basis equality.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .errors import SaturationDiverged
from .orders import GREVLEX, BlockOrder, MonomialOrder
from .poly import MPoly, exact_div, monomial_lcm

Exponent = tuple[int, ...]


def _divq(m: Exponent, lm: Exponent) -> Exponent | None:
    q = []
    for x, y in zip(m, lm):
        d = x - y
        if d < 0:
            return None
        q.append(d)
    return tuple(q)


def _monic(terms: dict, keyf, mod) -> tuple[Exponent, dict]:
    lm = max(terms, key=keyf)
    c = terms[lm]
    if mod is None:
        if c != 1:
            inv = Fraction(1) / c
            terms = {e: k * inv for e, k in terms.items()}
    else:
        if c != 1:
            inv = pow(c, mod - 2, mod)
            terms = {e: (k * inv) % mod for e, k in terms.items()}
    tail = dict(terms)
    del tail[lm]
    return lm, tail


def _normal_form(pdict: dict, basis: list, keyf, mod) -> dict:
    """Full normal form of a term dict against monic (lm, tail) entries."""
    if not pdict:
        return {}
    work = dict(pdict)
    heap = [(tuple(-v for v in keyf(e)), e) for e in work]
    heapq.heapify(heap)
    remainder: dict = {}
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        _, m = pop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        quotient = None
        tail = None
        for lm, tl in basis:
            q = _divq(m, lm)
            if q is not None:
                quotient, tail = q, tl
                break
        if quotient is None:
            remainder[m] = c
            continue
        for e, k in tail.items():
            ne = tuple(x + y for x, y in zip(quotient, e))
            s = work.get(ne, 0) - c * k
            if mod is not None:
                s %= mod
            if s:
                if ne not in work:
                    push(heap, (tuple(-v for v in keyf(ne)), ne))
                work[ne] = s
            else:
                work.pop(ne, None)
    return remainder


def _spoly(gi, gj, lcm_ij, mod) -> dict:
    """S-polynomial of two monic basis entries, as a term dict."""
    (lmi, tli), (lmj, tlj) = gi, gj
    qi = tuple(a - b for a, b in zip(lcm_ij, lmi))
    qj = tuple(a - b for a, b in zip(lcm_ij, lmj))
    out: dict = {}
    for e, k in tli.items():
        out[tuple(x + y for x, y in zip(qi, e))] = k
    for e, k in tlj.items():
        ne = tuple(x + y for x, y in zip(qj, e))
        s = out.get(ne, 0) - k
        if mod is not None:
            s %= mod
        if s:
            out[ne] = s
        elif ne in out:
            del out[ne]
    return out


def _update_pairs(G, pairs, lcms, h, keyf):
    """Gebauer-Moller update: prune old pairs, filter new ones against h."""
    t = len(G)
    lm_h = h[0]
    new_lcms = {i: monomial_lcm(G[i][0], lm_h) for i in range(t)}
    cand = sorted(range(t), key=lambda i: keyf(new_lcms[i]))
    kept: list[int] = []
    coprime: set[int] = set()
    for pos, i in enumerate(cand):
        li = new_lcms[i]
        if all(min(a, b) == 0 for a, b in zip(G[i][0], lm_h)):
            coprime.add(i)
            kept.append(i)
            continue
        dominated = any(
            _divq(li, new_lcms[j]) is not None for j in cand[pos + 1 :]
        ) or any(_divq(li, new_lcms[j]) is not None for j in kept)
        if not dominated:
            kept.append(i)
    surviving = {}
    for (i, j), l in zip(pairs, lcms):
        if (
            _divq(l, lm_h) is not None
            and monomial_lcm(G[i][0], lm_h) != l
            and monomial_lcm(G[j][0], lm_h) != l
        ):
            continue
        surviving[(i, j)] = l
    for i in kept:
        if i not in coprime:
            surviving[(i, t)] = new_lcms[i]
    return surviving


def _buchberger(dicts: list[dict], keyf, mod) -> list[tuple[Exponent, dict]]:
    G: list[tuple[Exponent, dict]] = []
    pairs: dict[tuple[int, int], Exponent] = {}
    seeds = [d for d in dicts if d]
    seeds.sort(key=lambda d: keyf(max(d, key=keyf)))
    for d in seeds:
        r = _normal_form(d, G, keyf, mod)
        if r:
            h = _monic(r, keyf, mod)
            pairs = _update_pairs(G, list(pairs), list(pairs.values()), h, keyf)
            G.append(h)
    while pairs:
        best = min(pairs, key=lambda p: keyf(pairs[p]))
        lcm_ij = pairs.pop(best)
        i, j = best
        s = _spoly(G[i], G[j], lcm_ij, mod)
        r = _normal_form(s, G, keyf, mod)
        if r:
            h = _monic(r, keyf, mod)
            pairs = _update_pairs(G, list(pairs), list(pairs.values()), h, keyf)
            G.append(h)
    return _interreduce(G, keyf, mod)


def _interreduce(G, keyf, mod) -> list[tuple[Exponent, dict]]:
    """Minimalize lead terms, then tail-reduce: the unique reduced basis."""
    keep = []
    for k, (lm, _) in enumerate(G):
        if not any(m != k and _divq(lm, G[m][0]) is not None for m in range(len(G))):
            keep.append(k)
    kept = [G[k] for k in keep]
    reduced = []
    for idx, (lm, tail) in enumerate(kept):
        others = [kept[m] for m in range(len(kept)) if m != idx]
        newtail = _normal_form(tail, others, keyf, mod)
        reduced.append((lm, newtail))
    reduced.sort(key=lambda g: keyf(g[0]))
    return reduced


def _to_dicts(polys: list[MPoly]) -> list[dict]:
    return [dict(p.terms) for p in polys if not p.is_zero()]


def _from_entry(entry, nvars, mod) -> MPoly:
    lm, tail = entry
    terms = dict(tail)
    terms[lm] = Fraction(1) if mod is None else 1
    p = MPoly.__new__(MPoly)
    p.nvars, p.mod, p.terms, p._hash = nvars, mod, terms, None
    return p


def groebner_basis(polys: list[MPoly], order: MonomialOrder = GREVLEX) -> tuple[MPoly, ...]:
    """The unique reduced Groebner basis, monic and sorted by lead monomial."""
    if not polys:
        return ()
    nvars, mod = polys[0].nvars, polys[0].mod
    for p in polys[1:]:
        polys[0]._check_compatible(p)
    entries = _buchberger(_to_dicts(polys), order.key, mod)
    return tuple(_from_entry(e, nvars, mod) for e in entries)


class Ideal:
    """A polynomial ideal with a per-order cache of reduced Groebner bases.

    The cache is an idempotent memo: concurrent writers can only insert the
    same (unique) reduced basis.
    """

    __slots__ = ("nvars", "mod", "gens", "_gb")

    def __init__(self, nvars: int, gens, mod: int | None = None):
        self.nvars = nvars
        self.mod = mod
        cleaned = []
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generator has wrong variable count")
            if g.mod != mod:
                raise ValueError("generator over the wrong coefficient field")
            if not g.is_zero():
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb: dict[MonomialOrder, tuple[MPoly, ...]] = {}

    @classmethod
    def of(cls, *gens: MPoly) -> "Ideal":
        if not gens:
            raise ValueError("need at least one generator to infer the ring")
        return cls(gens[0].nvars, list(gens), gens[0].mod)

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> tuple[MPoly, ...]:
        gb = self._gb.get(order)
        if gb is None:
            gb = groebner_basis(list(self.gens), order)
            self._gb[order] = gb
        return gb

    def normal_form(self, p: MPoly, order: MonomialOrder = GREVLEX) -> MPoly:
        gb = self.groebner_basis(order)
        entries = []
        for g in gb:
            lm = g.lead_monomial(order)
            entries.append((lm, {e: c for e, c in g.terms.items() if e != lm}))
        r = _normal_form(dict(p.terms), entries, order.key, self.mod)
        q = MPoly.__new__(MPoly)
        q.nvars, q.mod, q.terms, q._hash = self.nvars, self.mod, r, None
        return q

    def contains(self, p: MPoly) -> bool:
        return self.normal_form(p).is_zero()

    def is_zero_ideal(self) -> bool:
        return not self.groebner_basis()

    def is_unit_ideal(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def same_ideal(self, other: "Ideal") -> bool:
        return self.groebner_basis() == other.groebner_basis()

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.gens[:4])
        more = ", ..." if len(self.gens) > 4 else ""
        field = "QQ" if self.mod is None else f"GF({self.mod})"
        return f"Ideal({gens}{more}; {field}[{self.nvars} vars])"


# -- derived operations -------------------------------------------------------


def _extend(p: MPoly, extra_exp: int) -> MPoly:
    terms = {e + (extra_exp,): c for e, c in p.terms.items()}
    return MPoly(p.nvars + 1, terms, p.mod)


def _project(p: MPoly) -> MPoly:
    terms = {e[:-1]: c for e, c in p.terms.items()}
    return MPoly(p.nvars - 1, terms, p.mod)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via elimination of t from t*I + (1-t)*J."""
    if I.nvars != J.nvars or I.mod != J.mod:
        raise ValueError("ideals live in different rings")
    nv = I.nvars
    t = MPoly.variable(nv, nv + 1, I.mod)
    one = MPoly.const(nv + 1, 1, I.mod)
    gens = [t * _extend(f, 0) for f in I.gens]
    gens += [(one - t) * _extend(g, 0) for g in J.gens]
    order = BlockOrder(first=(nv,), nvars=nv + 1)
    gb = groebner_basis(gens, order)
    kept = [_project(g) for g in gb if all(e[-1] == 0 for e in g.terms)]
    return Ideal(nv, kept, I.mod)


def ideal_quotient(I: Ideal, f: MPoly) -> Ideal:
    """(I : f) for a single polynomial, by the intersection method."""
    if f.is_zero():
        return Ideal(I.nvars, [MPoly.const(I.nvars, 1, I.mod)], I.mod)
    if f.is_constant():
        return I
    meet = intersect(I, Ideal(I.nvars, [f], I.mod))
    quots = []
    for g in meet.gens:
        q = exact_div(g, f)
        assert q is not None, "intersection with (f) must consist of multiples of f"
        quots.append(q)
    return Ideal(I.nvars, quots, I.mod)


def quotient_by_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the intersection of single-generator quotients."""
    if not J.gens:
        raise ValueError("quotient by the zero ideal")
    result = ideal_quotient(I, J.gens[0])
    for g in J.gens[1:]:
        result = intersect(result, ideal_quotient(I, g))
    return result


MAX_SATURATION_ROUNDS = 64


def saturate_poly(I: Ideal, f: MPoly, max_rounds: int = MAX_SATURATION_ROUNDS) -> Ideal:
    """(I : f^infinity) by iterated single quotients."""
    current = I
    for _ in range(max_rounds):
        nxt = ideal_quotient(current, f)
        if nxt.groebner_basis() == current.groebner_basis():
            return current
        current = nxt
    raise SaturationDiverged(
        f"single-generator saturation did not stabilise in {max_rounds} rounds"
    )


def saturate(I: Ideal, J: Ideal, max_rounds: int = MAX_SATURATION_ROUNDS) -> Ideal:
    """(I : J^infinity) by iterating (· : J) until the basis stabilises."""
    current = I
    for _ in range(max_rounds):
        nxt = quotient_by_ideal(current, J)
        if nxt.groebner_basis() == current.groebner_basis():
            return current
        current = nxt
    raise SaturationDiverged(f"saturation did not stabilise in {max_rounds} rounds")


def eliminate(I: Ideal, keep) -> Ideal:
    """I ∩ K[kept variables], returned inside the ambient ring."""
    keep_set = set(keep)
    drop = tuple(i for i in range(I.nvars) if i not in keep_set)
    if not drop:
        return I
    order = BlockOrder(first=drop, nvars=I.nvars)
    gb = groebner_basis(list(I.gens), order)
    kept = [g for g in gb if all(all(e[i] == 0 for i in drop) for e in g.terms)]
    return Ideal(I.nvars, kept, I.mod)


# -- Hilbert series -----------------------------------------------------------


@dataclass(frozen=True)
class HilbertData:
    """Projective dimension (-1 = empty) and degree (None when empty)."""

    dimension: int
    degree: int | None


def _poly_add(a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _poly_shift(a: tuple, k: int) -> tuple:
    return (0,) * k + a if a != (0,) else a


def _poly_mul(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _minimalize(mons: frozenset) -> frozenset:
    mins = []
    for m in sorted(mons, key=sum):
        if not any(_divq(m, o) is not None for o in mins):
            mins.append(m)
    return frozenset(mins)


def _hilbert_numerator(mons: frozenset, memo: dict) -> tuple:
    """Numerator of HS(R/(mons)) over (1-t)^nvars, by the colon recursion."""
    cached = memo.get(mons)
    if cached is not None:
        return cached
    if not mons:
        result = (1,)
    elif any(sum(m) == 0 for m in mons):
        result = (0,)
    else:
        simple = [m for m in mons if sum(1 for e in m if e) == 1]
        if len(simple) == len(mons):
            result = (1,)
            for m in mons:
                factor = [0] * (sum(m) + 1)
                factor[0] = 1
                factor[sum(m)] = -1
                result = _poly_mul(result, tuple(factor))
        else:
            counts: dict[int, int] = {}
            for m in mons:
                if sum(1 for e in m if e) > 1:
                    for i, e in enumerate(m):
                        if e:
                            counts[i] = counts.get(i, 0) + 1
            j = max(counts, key=lambda i: (counts[i], -i))
            nv = len(next(iter(mons)))
            xj = tuple(1 if i == j else 0 for i in range(nv))
            plus = _minimalize(frozenset([m for m in mons if m[j] == 0]) | {xj})
            colon = _minimalize(
                frozenset(
                    m[:j] + (max(m[j] - 1, 0),) + m[j + 1 :] for m in mons
                )
            )
            result = _poly_add(
                _hilbert_numerator(plus, memo),
                _poly_shift(_hilbert_numerator(colon, memo), 1),
            )
    memo[mons] = result
    return result


def hilbert_dim_degree(I: Ideal) -> HilbertData:
    """Projective dimension and degree from the grevlex lead-term ideal."""
    gb = I.groebner_basis(GREVLEX)
    if any(g.is_constant() for g in gb):
        return HilbertData(-1, None)
    lts = _minimalize(frozenset(g.lead_monomial(GREVLEX) for g in gb))
    numerator = list(_hilbert_numerator(lts, {}))
    # strip factors of (1 - t)
    strips = 0
    while numerator and sum(numerator) == 0:
        # synthetic division by (1 - t): q_i = sum of leading coefficients
        acc = 0
        quotient = []
        for c in numerator[:-1]:
            acc += c
            quotient.append(acc)
        numerator = quotient
        strips += 1
    krull = I.nvars - strips
    if krull <= 0:
        return HilbertData(-1, None)
    degree = sum(numerator)
    assert degree > 0, "Hilbert degree of a nonempty scheme must be positive"
    return HilbertData(krull - 1, degree)
