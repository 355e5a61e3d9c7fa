"""Ideal quotients by variables, intersections and saturation."""

from __future__ import annotations

from gnegard.groebner import Ideal
from gnegard.poly import Poly, PolyRing


def _with_aux(ring: PolyRing) -> PolyRing:
    """R[t] with t last and an order eliminating t (t-degree compared first)."""
    n = ring.nvars
    weights = [(0,) * n + (1,), (1,) * n + (0,)]
    return PolyRing(n + 1, ring.p, weights, ring.names + ("t",))


def _eliminate_aux(big: PolyRing, ring: PolyRing, gens) -> list:
    """Elements of <gens> not involving t, moved back to ``ring``.

    The basis elements are split into homogeneous components, which is
    harmless here because every ideal being eliminated to is homogeneous.
    """
    tvar = big.nvars - 1
    out = []
    for g in Ideal(big, gens).groebner_basis():
        if big.exps(g.lm())[tvar]:
            continue
        for part in _drop_last(ring, g).homogeneous_components().values():
            out.append(part)
    return out


def _drop_last(ring: PolyRing, g: Poly) -> Poly:
    terms = {}
    for k, c in g.terms.items():
        a = g.ring.exps(k)
        if a[-1]:
            raise ValueError("polynomial still involves the eliminated variable")
        terms[a[:-1]] = c
    return ring.from_terms(terms)


def colon_variable(I: Ideal, i: int, method: str = "elimination") -> Ideal:
    """I : x_i^infinity.

    ``elimination``: eliminate t from I + (t x_i - 1).
    ``revlex``: grevlex basis with x_i as the smallest variable, then strip
    the largest power of x_i from every basis element.
    """
    ring = I.ring
    if method == "elimination":
        big = _with_aux(ring)
        lift = [big.convert(g) for g in I.generators]
        t = big.var(big.nvars - 1)
        lift.append(t * big.convert(ring.var(i)) - 1)
        return Ideal(ring, _eliminate_aux(big, ring, lift))
    if method == "revlex":
        n = ring.nvars
        perm = list(range(n))
        perm[i], perm[n - 1] = perm[n - 1], perm[i]
        names = [ring.names[perm[k]] for k in range(n)]
        swapped = PolyRing(n, ring.p, None, names)
        gb = Ideal(swapped, [swapped.convert(g, perm) for g in I.generators]).groebner_basis()
        out = []
        for g in gb:
            ex = [swapped.exps(k) for k in g.terms]
            low = min(a[n - 1] for a in ex)
            if low:
                g = swapped.from_terms({a[:n - 1] + (a[n - 1] - low,): c
                                        for a, c in g.exponent_dict().items()})
            out.append(ring.convert(g, perm))
        return Ideal(ring, out)
    raise ValueError("unknown method %r" % method)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    ring = I.ring
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    big = _with_aux(ring)
    t = big.var(big.nvars - 1)
    gens = [t * big.convert(f) for f in I.generators]
    gens += [(1 - t) * big.convert(g) for g in J.generators]
    return Ideal(ring, _eliminate_aux(big, ring, gens))


def saturate(I: Ideal, method: str = "elimination") -> Ideal:
    """Saturation I : m^infinity with respect to the irrelevant ideal.

    Equals the intersection of the I : x_i^infinity.  When every such quotient
    is already contained in I, I is saturated and is returned unchanged.
    """
    if not I.is_homogeneous():
        raise ValueError("saturation needs a homogeneous ideal")
    if I.is_zero():
        return I
    colons = [colon_variable(I, i, method) for i in range(I.nvars)]
    if all(I.contains_ideal(J) for J in colons):
        return I
    out = colons[0]
    for J in colons[1:]:
        out = intersect(out, J)
    return Ideal(I.ring, out.groebner_basis())


def is_saturated(I: Ideal, method: str = "elimination") -> bool:
    """I = I : m^infinity.  A single colon I : x_i^infinity may still be larger."""
    return I.contains_ideal(saturate(I, method))


def cut_linear_span(I: Ideal):
    """The ideal of the same scheme inside the linear span of V(I).

    Returns ``(J, kept)`` with J in the polynomial ring on the variables
    ``kept``.  In a reduced basis the leading variable of a linear element
    occurs in no other element, so dropping those variables is exact.
    """
    ring = I.ring
    gb = I.groebner_basis()
    dropped = set()
    rest = []
    for g in gb:
        if g.degree() == 1:
            dropped.add(next(i for i, v in enumerate(ring.exps(g.lm())) if v))
        else:
            rest.append(g)
    kept = [i for i in range(ring.nvars) if i not in dropped]
    small = PolyRing(len(kept), ring.p, None, [ring.names[i] for i in kept])
    index = [0] * ring.nvars
    for new, old in enumerate(kept):
        index[old] = new
    for g in rest:
        if any(ring.exps(k)[i] for k in g.terms for i in dropped):
            raise AssertionError("basis is not reduced")
    return Ideal(small, [small.convert(g, index) for g in rest]), kept
