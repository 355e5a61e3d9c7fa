"""Buchberger's algorithm for ideals and submodules of free modules over F_p.

Polynomial vectors are dicts ``{term key: coefficient}``.  A term key packs a
ring monomial together with a module component::

    K = ((mono + shift[c]) << TB) | tie[c]

so integer comparison of keys is a term-over-position order twisted by the
per-component ``shift`` (a ring monomial key, which gives Schreyer-type
orders), with ``tie`` breaking ties between components.  For ideals there is a
single component and ``K`` is the ring monomial key itself.

Pairs are selected by the normal strategy with sugar, and useless pairs are
discarded with the Gebauer-Moeller criteria.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field

from gnegard.field import inverse
from gnegard.poly import Poly, PolyRing

log = logging.getLogger(__name__)


class TermSpace:
    """Term keys of a free module R^s under a twisted position order."""

    def __init__(self, ring: PolyRing, shifts=None, ties=None, degrees=None):
        self.ring = ring
        shifts = list(shifts) if shifts is not None else [0]
        s = len(shifts)
        ties = list(ties) if ties is not None else list(range(s))
        if len(set(ties)) != s or min(ties) < 0:
            raise ValueError("ties must be distinct non-negative ints")
        if min(shifts) < 0:
            raise ValueError("shifts must be non-negative")
        self.rank = s
        self.TB = max(ties).bit_length()
        self.TMASK = (1 << self.TB) - 1
        self.shifts = shifts
        self.ties = ties
        self.degrees = list(degrees) if degrees is not None else [0] * s
        self.comp_of_tie = {t: c for c, t in enumerate(ties)}
        self.shift_of_tie = {t: sh for t, sh in zip(ties, shifts)}
        self.deg_of_tie = {t: d for t, d in zip(ties, self.degrees)}
        self.is_ideal = s == 1 and self.TB == 0 and shifts[0] == 0

    def key(self, comp: int, mono: int) -> int:
        return ((mono + self.shifts[comp]) << self.TB) | self.ties[comp]

    def split(self, K: int):
        """Return ``(component, ring monomial)`` of a term key."""
        t = K & self.TMASK
        return self.comp_of_tie[t], (K >> self.TB) - self.shift_of_tie[t]

    def term_degree(self, K: int) -> int:
        t = K & self.TMASK
        return self.ring.mdeg((K >> self.TB) - self.shift_of_tie[t]) + self.deg_of_tie[t]

    def encode(self, vector) -> dict:
        """Convert a list of Poly (one per component) to a key dict."""
        out = {}
        for c, f in enumerate(vector):
            sh = self.shifts[c]
            t = self.ties[c]
            for m, v in f.terms.items():
                out[((m + sh) << self.TB) | t] = v
        return out

    def decode(self, d: dict) -> list:
        comps = [dict() for _ in range(self.rank)]
        for K, v in d.items():
            c, m = self.split(K)
            comps[c][m] = v
        return [Poly(self.ring, t) for t in comps]


@dataclass
class GBResult:
    basis: list
    minimal_inputs: list = field(default_factory=list)
    complete: bool = True
    pairs_reduced: int = 0


class _Lead:
    __slots__ = ("K", "tie", "mono", "e", "poly", "sugar")

    def __init__(self, K, tie, mono, e, poly, sugar):
        self.K = K
        self.tie = tie
        self.mono = mono
        self.e = e
        self.poly = poly
        self.sugar = sugar


def _sugar_of(d: dict, space: TermSpace) -> int:
    return max(space.term_degree(K) for K in d)


def reduce_dict(f: dict, reducers, space: TermSpace, full=True) -> dict:
    """Reduce ``f`` (consumed) by monic reducers; return the remainder.

    With ``full=False`` only the leading term is reduced (top reduction).
    """
    ring = space.ring
    p = ring.p
    TB, TMASK = space.TB, space.TMASK
    shift_of_tie = space.shift_of_tie
    EMASK, GUARD = ring.EMASK, ring.GUARD
    heap = [-K for K in f]
    heapq.heapify(heap)
    rem = {}
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        K = -pop(heap)
        c = f.get(K)
        if c is None:
            continue
        t = K & TMASK
        mono = (K >> TB) - shift_of_tie[t]
        e = (-mono) & EMASK
        eg = e | GUARD
        for g in reducers:
            if g.tie == t and (eg - g.e) & GUARD == GUARD:
                qs = (mono - g.mono) << TB
                get = f.get
                for kg, cg in g.poly.items():
                    nk = kg + qs
                    old = get(nk)
                    if old is None:
                        f[nk] = (-c * cg) % p
                        push(heap, -nk)
                    else:
                        nv = (old - c * cg) % p
                        if nv:
                            f[nk] = nv
                        else:
                            del f[nk]
                break
        else:
            if not full:
                # put it back and stop
                push(heap, -K)
                f.update(rem)
                return f
            rem[K] = c
            del f[K]
    return rem


def _monic(d: dict, p: int) -> dict:
    lc = d[max(d)]
    if lc == 1:
        return d
    inv = inverse(lc, p)
    return {k: v * inv % p for k, v in d.items()}


def buchberger(inputs, space: TermSpace, degree_bound=None, reduce_result=True) -> GBResult:
    """Groebner basis of the submodule generated by ``inputs`` (key dicts).

    Inputs are fed to the pair queue at their own sugar degree, after the
    S-pairs of that degree.  For homogeneous input this makes
    ``minimal_inputs`` the indices of a minimal generating subset: an input is
    recorded iff it does not reduce to zero against everything of lower or
    equal degree processed before it.
    """
    ring = space.ring
    p = ring.p
    TB, TMASK = space.TB, space.TMASK
    EMASK, GUARD = ring.EMASK, ring.GUARD
    mdivides, mlcm = ring.mdivides, ring.mlcm
    ideal_case = space.is_ideal

    basis: list[_Lead] = []
    active: list[int] = []
    queue = []
    # queue entries: (sugar, kind, lcm key, i, j) with kind 0 = pair, 1 = input
    for idx, d in enumerate(inputs):
        if d:
            queue.append((_sugar_of(d, space), 1, max(d), idx, -1))
    heapq.heapify(queue)
    live_pairs = {}
    minimal_inputs = []
    complete = True
    reduced = 0

    def split(K):
        t = K & TMASK
        return t, (K >> TB) - space.shift_of_tie[t]

    def lcm_key(a: _Lead, b: _Lead):
        m = mlcm(a.mono, b.mono)
        return ((m + space.shift_of_tie[a.tie]) << TB) | a.tie, m

    def coprime(a: _Lead, b: _Lead):
        return ideal_case and ring.mcoprime(a.mono, b.mono)

    def insert(d, sugar):
        d = _monic(d, p)
        K = max(d)
        t, mono = split(K)
        h = _Lead(K, t, mono, (-mono) & EMASK, d, sugar)
        hi = len(basis)
        basis.append(h)
        # Gebauer-Moeller update
        cands = []
        for j in active:
            g = basis[j]
            if g.tie != t:
                continue
            lk, lm_ = lcm_key(h, g)
            cands.append((j, lk, lm_))
        keep = []
        while cands:
            j, lk, lm_ = cands.pop()
            g = basis[j]
            if coprime(h, g):
                keep.append((j, lk, lm_, True))
                continue
            redundant = any(mdivides(o[2], lm_) for o in cands) or \
                any(mdivides(o[2], lm_) for o in keep)
            if not redundant:
                keep.append((j, lk, lm_, False))
        # old pairs made redundant by the new lead
        for key_ij, (lk, lm_) in list(live_pairs.items()):
            i, j = key_ij
            a, b = basis[i], basis[j]
            if a.tie != t or not mdivides(mono, lm_):
                continue
            l1 = mlcm(a.mono, mono)
            l2 = mlcm(b.mono, mono)
            if l1 != lm_ and l2 != lm_:
                del live_pairs[key_ij]
        for j, lk, lm_, is_coprime in keep:
            if is_coprime:
                continue
            g = basis[j]
            s = max(h.sugar + ring.mdeg(lm_ - h.mono), g.sugar + ring.mdeg(lm_ - g.mono))
            live_pairs[(j, hi)] = (lk, lm_)
            heapq.heappush(queue, (s, 0, lk, j, hi))
        active[:] = [j for j in active if not (basis[j].tie == t and mdivides(mono, basis[j].mono))]
        active.append(hi)

    while queue:
        s, kind, lk, i, j = heapq.heappop(queue)
        if kind == 0 and (i, j) not in live_pairs:
            continue
        if degree_bound is not None and s > degree_bound:
            complete = False
            break
        reducers = [basis[a] for a in active]
        if kind == 1:
            d = dict(inputs[i])
            sugar = s
        else:
            del live_pairs[(i, j)]
            a, b = basis[i], basis[j]
            m = (lk >> TB) - space.shift_of_tie[a.tie]
            qa = (m - a.mono) << TB
            qb = (m - b.mono) << TB
            d = {k + qa: v for k, v in a.poly.items()}
            for k, v in b.poly.items():
                nk = k + qb
                nv = (d.get(nk, 0) - v) % p
                if nv:
                    d[nk] = nv
                else:
                    d.pop(nk, None)
            sugar = s
        reduced += 1
        if not d:
            continue
        r = reduce_dict(d, reducers, space)
        if r:
            if kind == 1:
                minimal_inputs.append(i)
            insert(r, sugar)
    gb = [basis[a].poly for a in active]
    if reduce_result:
        gb = interreduce(gb, space)
    return GBResult(gb, minimal_inputs, complete, reduced)


def interreduce(polys, space: TermSpace) -> list:
    """Reduced basis: minimal leading terms and fully reduced tails, sorted by lead."""
    ring = space.ring
    p = ring.p
    items = [_monic(dict(d), p) for d in polys if d]
    items.sort(key=max)
    leads = []
    for d in items:
        K = max(d)
        t = K & space.TMASK
        mono = (K >> space.TB) - space.shift_of_tie[t]
        leads.append((t, mono))
    keep = []
    for a, (t, m) in enumerate(leads):
        if any(b != a and leads[b][0] == t and ring.mdivides(leads[b][1], m)
               and (leads[b][1] != m or b < a) for b in range(len(leads))):
            continue
        keep.append(a)
    lead_objs = []
    for a in keep:
        t, mono = leads[a]
        lead_objs.append(_Lead(max(items[a]), t, mono, (-mono) & ring.EMASK, items[a], 0))
    out = []
    for idx, g in enumerate(lead_objs):
        others = [h for k, h in enumerate(lead_objs) if k != idx]
        tail = dict(g.poly)
        lead_c = tail.pop(g.K)
        r = reduce_dict(tail, others, space)
        r[g.K] = lead_c
        out.append(r)
    out.sort(key=max)
    return out


def normal_form_dict(f: dict, gb, space: TermSpace) -> dict:
    ring = space.ring
    reducers = []
    for d in gb:
        K = max(d)
        t = K & space.TMASK
        mono = (K >> space.TB) - space.shift_of_tie[t]
        reducers.append(_Lead(K, t, mono, (-mono) & ring.EMASK, _monic(d, ring.p), 0))
    return reduce_dict(dict(f), reducers, space)


class Ideal:
    """Ideal of a polynomial ring, with a lazily computed reduced Groebner basis."""

    def __init__(self, ring: PolyRing, generators):
        self.ring = ring
        self.generators = [g for g in generators if not g.is_zero()]
        for g in self.generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self._gb = None
        self._space = TermSpace(ring)
        self._minimal = None

    @property
    def nvars(self):
        return self.ring.nvars

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def _run(self):
        res = buchberger([g.terms for g in self.generators], self._space)
        self._gb = [Poly(self.ring, d) for d in res.basis]
        if self.is_homogeneous():
            self._minimal = [self.generators[i] for i in sorted(res.minimal_inputs)]
        return res

    def groebner_basis(self) -> list:
        """Reduced Groebner basis (monic, sorted by leading monomial)."""
        if self._gb is None:
            self._run()
        return self._gb

    def truncated_basis(self, degree_bound: int):
        """Partial basis from a run that stops at the given sugar degree."""
        res = buchberger([g.terms for g in self.generators], self._space, degree_bound)
        return [Poly(self.ring, d) for d in res.basis], res.complete

    def minimal_generators(self) -> list:
        """A minimal homogeneous generating set chosen among the generators."""
        if not self.is_homogeneous():
            raise ValueError("minimal generators need a homogeneous ideal")
        if self._minimal is None:
            self._run()
        return self._minimal

    def leading_monomials(self) -> list:
        return [self.ring.exps(g.lm()) for g in self.groebner_basis()]

    def normal_form(self, f: Poly) -> Poly:
        gb = self.groebner_basis()
        return Poly(self.ring, normal_form_dict(f.terms, [g.terms for g in gb], self._space))

    def contains(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.generators)

    def is_unit(self) -> bool:
        return any(g.lm() == 0 for g in self.groebner_basis())

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        return self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash(tuple(self.groebner_basis()))

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, self.generators + other.generators)

    def __repr__(self):
        return "Ideal(%d generators in %s)" % (len(self.generators), self.ring)
