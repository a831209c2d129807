"""Propositions as idempotent functionals, states, expectations, positivity.

A map into the linearized truth values is the same thing as an idempotent x
in F(C) (the top coefficient; the bottom one is eps - x).  Binary operations
on propositions require the underlying truth-valued maps to form an
admissible pair first; on admissible pairs the meet is the convolution
product and the join is p + q - p*q.  States are counit-normalized elements,
expectations evaluate functionals on them, and positivity is certified by an
explicit decomposition Delta(c) = sum_i c_i^* (x) c_i rather than searched for.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coalgebra import BOT, Coalgebra, Element, TOP, omega
from .convolution import (
    AdmissiblePair,
    ConvElement,
    admissible_pair,
    assemble_orthogonal_family,
    conv_mul,
    conv_unit,
    is_admissible,
)
from .exact import ONE, Scalar, Vector, ZERO, rational_sqrt
from .maps import CoalgebraMap


class NotAdmissibleError(ValueError):
    def __init__(self, witness):
        super().__init__(f"propositions do not form an admissible pair (witness {witness.label})")
        self.witness = witness


class UnsupportedParameter(ValueError):
    """Convex parameter without rational square roots of t and 1 - t."""


@dataclass(frozen=True)
class Proposition:
    """A certified idempotent of F(C)."""

    x: ConvElement

    def __post_init__(self):
        if conv_mul(self.x, self.x).coords != self.x.coords:
            raise ValueError("functional is not idempotent")

    @property
    def coalgebra(self) -> Coalgebra:
        return self.x.coalgebra

    def complement(self) -> "Proposition":
        return Proposition(conv_unit(self.coalgebra) - self.x)

    def as_truth_map(self) -> CoalgebraMap:
        """The map C -> kOmega with bottom row eps - x and top row x."""
        c = self.coalgebra
        family = {BOT: conv_unit(c) - self.x, TOP: self.x}
        return assemble_orthogonal_family(family, target=omega(with_star=c.star is not None))


def truth_value_map(f: CoalgebraMap) -> Proposition:
    """Extract x_top from a verified map C -> kOmega."""
    if not f.verified:
        raise ValueError("map must be verified")
    if tuple(f.target.basis) != (BOT, TOP):
        raise ValueError("target is not the linearized truth values")
    top_row = f.mat.row(f.target.index(TOP))
    return Proposition(ConvElement(f.source, top_row))


def _certified(p: Proposition, q: Proposition) -> AdmissiblePair:
    pair_ = admissible_pair(p.as_truth_map(), q.as_truth_map())
    if not pair_.certified:
        _, witness = is_admissible(pair_.x1, pair_.x2)
        raise NotAdmissibleError(witness)
    return pair_


def prop_and(p: Proposition, q: Proposition) -> Proposition:
    """Meet of an admissible pair of propositions: the convolution product."""
    _certified(p, q)
    return Proposition(conv_mul(p.x, q.x))


def prop_or(p: Proposition, q: Proposition) -> Proposition:
    """Join of an admissible pair: p + q - p*q."""
    _certified(p, q)
    return Proposition(p.x + q.x - conv_mul(p.x, q.x))


@dataclass(frozen=True)
class State:
    """An element with eps(c) = 1, optionally with a positivity witness
    {c_i} satisfying Delta(c) = sum_i c_i^* (x) c_i."""

    element: Element
    witness: Optional[tuple] = None  # tuple of coordinate Vectors

    def __post_init__(self):
        if self.element.eps_value() != ONE:
            raise ValueError("state is not counit-normalized")
        if self.witness is not None:
            c = self.element.coalgebra
            if c.star is None:
                raise ValueError("positivity witness needs a star structure")
            lhs: dict = {}
            for (k, i, j), v in c.delta.entries.items():
                if self.element.coords[k]:
                    key = (i, j)
                    lhs[key] = lhs.get(key, ZERO) + v * self.element.coords[k]
            rhs: dict = {}
            for w in self.witness:
                ws = c.star_apply(w)
                for i, a in enumerate(ws):
                    if not a:
                        continue
                    for j, b in enumerate(w):
                        if b:
                            key = (i, j)
                            rhs[key] = rhs.get(key, ZERO) + a * b
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                raise ValueError("witness does not decompose the comultiplication")

    @property
    def coalgebra(self) -> Coalgebra:
        return self.element.coalgebra


def expectation(x: ConvElement, s: State) -> Scalar:
    """<x>_c: evaluate the functional on the state."""
    if x.coalgebra != s.coalgebra:
        raise ValueError("observable and state live on different coalgebras")
    return x(s.element.coords)


def star_on_functionals(x: ConvElement) -> ConvElement:
    """x^*(c) = conjugate(x(c^*)); antilinear and multiplication-reversing."""
    c = x.coalgebra
    if c.star is None:
        raise ValueError(f"coalgebra {c.name!r} carries no star structure")
    out = [ZERO] * c.dim
    for k in range(c.dim):
        v = x.coords[c.star[k]]
        if v:
            out[k] = v.conjugate()
    return ConvElement(c, tuple(out))


def positivity_check(x: ConvElement, s: State) -> Scalar:
    """<x^* x>_s: computed in F(C), cross-checked against the witness sum
    sum_i |x(c_i)|^2, and asserted to be a nonnegative rational."""
    if s.witness is None:
        raise ValueError("state carries no positivity witness")
    value = expectation(conv_mul(star_on_functionals(x), x), s)
    from_witness = ZERO
    for w in s.witness:
        from_witness = from_witness + x(w).abs_squared()
    if value != from_witness:
        raise AssertionError("expectation disagrees with the witness sum")
    if not value.is_nonneg_rational():
        raise AssertionError("positivity value is not a nonnegative rational")
    return value


def convex_combination(s0: State, s1: State, t: Fraction) -> State:
    """(1-t) s0 + t s1 with rescaled witnesses.

    Supported exactly when sqrt(t) and sqrt(1-t) are rational; otherwise
    UnsupportedParameter is raised.
    """
    if s0.coalgebra != s1.coalgebra:
        raise ValueError("states live on different coalgebras")
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("parameter must lie in [0, 1]")
    r1 = rational_sqrt(t)
    r0 = rational_sqrt(1 - t)
    if r0 is None or r1 is None:
        raise UnsupportedParameter(f"sqrt({1 - t}) or sqrt({t}) is irrational")
    c = s0.coalgebra
    coords = tuple(
        Scalar(1 - t) * a + Scalar(t) * b
        for a, b in zip(s0.element.coords, s1.element.coords)
    )
    witness = None
    if s0.witness is not None and s1.witness is not None:
        scaled0 = [tuple(Scalar(r0) * v for v in w) for w in s0.witness]
        scaled1 = [tuple(Scalar(r1) * v for v in w) for w in s1.witness]
        witness = tuple(scaled0 + scaled1)
    return State(Element(c, coords), witness)
