"""Structured quantum elements: group-likes, primitives, matrix-unit systems,
nilpotents, and finite-support functors.

Enumerating all coalgebra maps into an arbitrary target is a quadratic
(variety) problem, so enumeration ships only for the constructor families
where a closed form is provable; everything else is verification of supplied
candidates.
"""

from __future__ import annotations

from itertools import product

from .coalgebra import CategoryData, Coalgebra, Element, singleton
from .convolution import ConvElement, conv_mul, conv_power, conv_unit
from .exact import Matrix, ONE, Scalar, Vector, ZERO, kernel, unit_vec
from .maps import CoalgebraMap


class EnumerationUnsupported(ValueError):
    """Raised when group-like enumeration is requested off the supported families."""


def is_grouplike(el: Element) -> bool:
    """Delta(g) = g (x) g and eps(g) = 1, checked exactly."""
    c = el.coalgebra
    g = el.coords
    lhs: dict = {}
    for (k, i, j), v in c.delta.entries.items():
        if g[k]:
            key = (i, j)
            lhs[key] = lhs.get(key, ZERO) + v * g[k]
    rhs = {}
    for i, a in enumerate(g):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                rhs[(i, j)] = a * b
    lhs = {k: v for k, v in lhs.items() if v}
    return lhs == rhs and el.eps_value() == ONE


def grouplikes(d: Coalgebra) -> list:
    """The complete list of group-likes, for supported constructors only.

    linearize: every basis element.  fd_monoid_additive: only degree zero
    (any higher tail forces a nilpotent scalar in characteristic zero).
    fd_category: the identity morphisms, valid exactly when identities
    factor trivially and endomorphism monoids are trivial (poset-like
    categories); multiplicativity then pins the support to one identity.
    The pair category fails that condition (and the comatrix coalgebra has
    no group-likes at all for n >= 2), so it stays verification-only.
    """
    prov = d.provenance
    if prov is None:
        raise EnumerationUnsupported(
            "group-like enumeration is verification-only for this coalgebra; "
            "use is_grouplike on candidates"
        )
    kind = prov[0]
    if kind == "linearize":
        out = [Element.basis(d, b) for b in d.basis]
    elif kind == "fd_monoid_additive":
        out = [Element.basis(d, "d0")]
    elif kind == "fd_category":
        cat: CategoryData = prov[1]
        if not (cat.has_trivial_endos() and cat.identities_factor_trivially()):
            raise EnumerationUnsupported(
                "enumeration needs poset-like category data; verify candidates instead"
            )
        # basis order equals morphism order, so map identities by position
        pos = {m: k for k, m in enumerate(cat.morphisms)}
        out = [
            Element(d, unit_vec(d.dim, pos[cat.identity[obj]]))
            for obj in cat.objects
        ]
    else:
        raise EnumerationUnsupported(f"unsupported constructor {kind!r}")
    for el in out:
        assert is_grouplike(el)
    return out


def grouplike_as_map(el: Element) -> CoalgebraMap:
    """A group-like is the same thing as a map from the singleton."""
    if not is_grouplike(el):
        raise ValueError("element is not group-like")
    mat = Matrix.col_vector(el.coords)
    return CoalgebraMap.verify(singleton(), el.coalgebra, mat)


def primitives(d: Coalgebra, g: Element, h: Element | None = None) -> Matrix:
    """Basis (columns) of the solution space of Delta(p) = p (x) g + h (x) p.

    g and h must verify as group-likes; the counit vanishes on every solution
    automatically, which is asserted.  h defaults to g.
    """
    if h is None:
        h = g
    if not is_grouplike(g):
        raise ValueError("g fails the group-like verification")
    if not is_grouplike(h):
        raise ValueError("h fails the group-like verification")
    n = d.dim
    # unknown p in k^n; equations indexed by target pairs (i, j)
    entries = {}
    for (k, i, j), v in d.delta.entries.items():
        entries[(i * n + j, k)] = entries.get((i * n + j, k), ZERO) + v
    for i in range(n):
        for j in range(n):
            row = i * n + j
            # subtract p_i g_j
            if g.coords[j]:
                entries[(row, i)] = entries.get((row, i), ZERO) - g.coords[j]
            # subtract h_i p_j
            if h.coords[i]:
                entries[(row, j)] = entries.get((row, j), ZERO) - h.coords[i]
    system = Matrix(n * n, n, entries)
    basis = kernel(system)
    for col in range(basis.cols):
        p = Element(d, basis.col(col))
        assert p.eps_value() == ZERO, "counit failed to vanish on a primitive"
    return basis


def matrix_unit_system_check(x: dict, c: Coalgebra) -> bool:
    """x maps (i, j) pairs over an index set I to F(C); check the relations
    x_ij * x_j'k = delta_{j,j'} x_ik and sum_i x_ii = 1."""
    index_set = sorted({i for (i, _) in x} | {j for (_, j) in x})
    if set(x) != {(i, j) for i in index_set for j in index_set}:
        raise ValueError("index family is not square")
    zero = ConvElement(c, (ZERO,) * c.dim)
    for (i, j) in x:
        for (jp, k) in x:
            prod = conv_mul(x[(i, j)], x[(jp, k)])
            expect = x[(i, k)] if j == jp else zero
            if prod.coords != expect.coords:
                return False
    total = zero
    for i in index_set:
        total = total + x[(i, i)]
    return total.coords == c.eps


def nilpotent_element_check(x: ConvElement, bound: int | None = None):
    """Check whether some convolution power x^m vanishes, m <= bound.

    Default bound is dim(C).  Returns (True, m) with the first vanishing
    power, or (False, bound).
    """
    c = x.coalgebra
    if bound is None:
        bound = max(c.dim, 1)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    power = x
    for m in range(1, bound + 1):
        if power.is_zero():
            return True, m
        if m < bound:
            power = conv_mul(power, x)
    return False, bound


def finite_support_functor_check(assignment: dict, cat: CategoryData, c: Coalgebra) -> bool:
    """Check a morphism-indexed family in F(C) against the functor laws:
    multiplicative over the composition table (non-composable pairs multiply
    to zero) and the identities sum to the unit of F(C)."""
    zero = ConvElement(c, (ZERO,) * c.dim)

    def value(m) -> ConvElement:
        return assignment.get(m, zero)

    for m1 in cat.morphisms:
        for m2 in cat.morphisms:
            prod = conv_mul(value(m1), value(m2))
            m = cat.compose.get((m1, m2))
            expect = value(m) if m is not None else zero
            if prod.coords != expect.coords:
                return False
    total = zero
    for obj in cat.objects:
        total = total + value(cat.identity[obj])
    return total.coords == conv_unit(c).coords
