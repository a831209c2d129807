"""Coalgebra morphisms and their verification.

A candidate matrix f (rows indexed by the target basis, columns by the
source basis) is a coalgebra map when it intertwines the comultiplications,
Delta_D . f = (f (x) f) . Delta_C, and the counits, eps_D . f = eps_C.  Both
laws are checked as exact structure-tensor equalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coalgebra import Coalgebra, Element, singleton
from .exact import Matrix, ONE, Scalar, Vector, ZERO


@dataclass
class MapReport:
    ok: bool
    # first violated instance, as (law, source-basis label, detail)
    violation: tuple | None = None


def _outer_flat(u: Vector, v: Vector) -> dict:
    """u (x) v as a flat dict over row-major pair indices."""
    n2 = len(v)
    out = {}
    for a, x in enumerate(u):
        if not x:
            continue
        for b, y in enumerate(v):
            if y:
                out[a * n2 + b] = x * y
    return out


def check_coalgebra_map(mat: Matrix, source: Coalgebra, target: Coalgebra) -> MapReport:
    """Verify both intertwining laws; report the first failing basis index."""
    if mat.rows != target.dim or mat.cols != source.dim:
        raise ValueError(
            f"matrix shape {mat.rows}x{mat.cols} does not match "
            f"target dim {target.dim} x source dim {source.dim}"
        )
    nt = target.dim
    cols = [mat.col(k) for k in range(source.dim)]
    for k in range(source.dim):
        # (f (x) f) Delta_C (c_k), flattened over target pairs
        lhs: dict = {}
        for (kk, i, j), v in source.delta.entries.items():
            if kk != k:
                continue
            for key, w in _outer_flat(cols[i], cols[j]).items():
                acc = lhs.get(key, ZERO) + v * w
                if acc:
                    lhs[key] = acc
                else:
                    lhs.pop(key, None)
        # Delta_D (f(c_k))
        rhs: dict = {}
        for a, fa in enumerate(cols[k]):
            if not fa:
                continue
            for (p, q), w in target.delta_slice(a).entries.items():
                key = p * nt + q
                acc = rhs.get(key, ZERO) + fa * w
                if acc:
                    rhs[key] = acc
                else:
                    rhs.pop(key, None)
        if lhs != rhs:
            return MapReport(False, ("comultiplication", source.basis[k], None))
    for k in range(source.dim):
        lhs_eps = ZERO
        for a, fa in enumerate(cols[k]):
            if fa and target.eps[a]:
                lhs_eps = lhs_eps + target.eps[a] * fa
        if lhs_eps != source.eps[k]:
            return MapReport(False, ("counit", source.basis[k], str(lhs_eps)))
    return MapReport(True)


@dataclass(frozen=True)
class CoalgebraMap:
    source: Coalgebra
    target: Coalgebra
    mat: Matrix
    verified: bool = field(default=False, compare=False)

    @staticmethod
    def verify(source: Coalgebra, target: Coalgebra, mat: Matrix) -> "CoalgebraMap":
        report = check_coalgebra_map(mat, source, target)
        if not report.ok:
            raise ValueError(f"not a coalgebra map: violation {report.violation}")
        return CoalgebraMap(source, target, mat, verified=True)

    @staticmethod
    def unverified(source: Coalgebra, target: Coalgebra, mat: Matrix) -> "CoalgebraMap":
        return CoalgebraMap(source, target, mat, verified=False)

    @staticmethod
    def identity(c: Coalgebra) -> "CoalgebraMap":
        return CoalgebraMap(c, c, Matrix.identity(c.dim), verified=True)

    @staticmethod
    def counit_collapse(c: Coalgebra) -> "CoalgebraMap":
        """The unique map to the singleton, given by the counit."""
        pt = singleton()
        return CoalgebraMap(c, pt, Matrix.row_vector(c.eps), verified=True)

    @staticmethod
    def from_set_map(source: Coalgebra, target: Coalgebra, mapping: dict) -> "CoalgebraMap":
        """Linearize a map of basis labels between linearized sets."""
        entries = {}
        for s_label, t_label in mapping.items():
            entries[(target.index(t_label), source.index(s_label))] = ONE
        if len(mapping) != source.dim:
            raise ValueError("set map must cover every source label")
        return CoalgebraMap.verify(source, target, Matrix(target.dim, source.dim, entries))

    def report(self) -> MapReport:
        return check_coalgebra_map(self.mat, self.source, self.target)

    def __call__(self, el: Element) -> Element:
        if el.coalgebra != self.source:
            raise ValueError("element does not live in the map's source")
        return Element(self.target, self.mat.apply(el.coords))

    def compose(self, other: "CoalgebraMap") -> "CoalgebraMap":
        """self after other."""
        if other.target != self.source:
            raise ValueError("maps do not compose")
        return CoalgebraMap(
            other.source,
            self.target,
            self.mat @ other.mat,
            verified=self.verified and other.verified,
        )


def is_coalgebra_map(mat: Matrix, source: Coalgebra, target: Coalgebra):
    """Convenience wrapper: (bool, report with first violated instance)."""
    report = check_coalgebra_map(mat, source, target)
    return report.ok, report
