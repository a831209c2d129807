"""Quivers, their quantum counterparts, comodules, and the corestriction /
coinduction adjunction.

A quantum quiver is a pair of coalgebra maps d0: D1 -> D0^o, d1: D1 -> D0
whose mixed Sweedler tensor is flip-symmetric on every basis element of D1
(the same admissibility condition as the partial product, with targets D0^o
and D0).  The literal source formula with a repeated d0 on the right-hand
side is available behind strict=True; see the README convention table.

Left comodules are encoded as coaction matrices lambda: M -> D (x) M, and the
cotensor N box_D C is the exact kernel of rho_N (x) id - id (x) lambda.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .coalgebra import Coalgebra, linearize, opposite
from .exact import Matrix, ONE, Scalar, ZERO, kernel, solve_matrix
from .maps import CoalgebraMap


@dataclass(frozen=True)
class ClassicalQuiver:
    vertices: tuple
    edges: tuple  # (label, source vertex, target vertex)

    def __post_init__(self):
        vs = set(self.vertices)
        labels = [e[0] for e in self.edges]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate edge labels")
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        for name, s, t in self.edges:
            if s not in vs or t not in vs:
                raise ValueError(f"edge {name!r} has endpoints outside the vertex set")

    def edge(self, label: str):
        for e in self.edges:
            if e[0] == label:
                return e
        raise KeyError(label)

    def src(self, label: str) -> str:
        return self.edge(label)[1]

    def tgt(self, label: str) -> str:
        return self.edge(label)[2]

    def incoming(self, v: str) -> tuple:
        """Edges with target v, sorted by label."""
        return tuple(sorted(e[0] for e in self.edges if e[2] == v))

    def outgoing(self, v: str) -> tuple:
        return tuple(sorted(e[0] for e in self.edges if e[1] == v))


@dataclass(frozen=True)
class QuantumQuiver:
    d1: Coalgebra          # edges
    d0: Coalgebra          # vertices
    src_map: CoalgebraMap  # D1 -> opposite(D0)
    tgt_map: CoalgebraMap  # D1 -> D0
    classical: Optional[ClassicalQuiver] = None

    def __post_init__(self):
        if self.src_map.source != self.d1 or self.tgt_map.source != self.d1:
            raise ValueError("structure maps must have the edge coalgebra as source")
        if self.src_map.target != opposite(self.d0):
            raise ValueError("source map must land in the co-opposite vertex coalgebra")
        if self.tgt_map.target != self.d0:
            raise ValueError("target map must land in the vertex coalgebra")


def quantum_quiver_check(q: QuantumQuiver, strict: bool = False):
    """Compatibility of (d0, d1); (True, None) or (False, offending labels).

    Default: the admissible-pair condition
        sum delta[k,i,j] (d0(c_i) (x) d1(c_j) - d0(c_j) (x) d1(c_i)) = 0.
    strict=True checks the literal variant whose right-hand side repeats d0.
    """
    c = q.d1
    s, t = q.src_map.mat, q.tgt_map.mat
    bad = []
    for k in range(c.dim):
        diff: dict = {}
        for (kk, i, j), v in c.delta.entries.items():
            if kk != k:
                continue
            for a, ua in enumerate(s.col(i)):
                if not ua:
                    continue
                for b, wb in enumerate(t.col(j)):
                    if wb:
                        diff[(a, b)] = diff.get((a, b), ZERO) + v * ua * wb
            right = s if strict else t
            for a, ua in enumerate(s.col(j)):
                if not ua:
                    continue
                for b, wb in enumerate(right.col(i)):
                    if wb:
                        diff[(a, b)] = diff.get((a, b), ZERO) - v * ua * wb
        if any(diff.values()):
            bad.append(c.basis[k])
    if bad:
        return False, tuple(bad)
    return True, None


def from_classical(q: ClassicalQuiver) -> QuantumQuiver:
    """Linearize a classical quiver; the result passes the compatibility check."""
    d1 = linearize(tuple(e[0] for e in q.edges), name="k.edges")
    d0 = linearize(q.vertices, name="k.vertices")
    d0_op = opposite(d0)
    src_entries = {}
    tgt_entries = {}
    for col, (name, s, t) in enumerate(q.edges):
        src_entries[(d0.index(s), col)] = ONE
        tgt_entries[(d0.index(t), col)] = ONE
    src = CoalgebraMap.verify(d1, d0_op, Matrix(d0.dim, d1.dim, src_entries))
    tgt = CoalgebraMap.verify(d1, d0, Matrix(d0.dim, d1.dim, tgt_entries))
    return QuantumQuiver(d1, d0, src, tgt, classical=q)


# -- comodules ---------------------------------------------------------------

@dataclass(frozen=True)
class Comodule:
    """Right C-comodule: coaction rho: M -> M (x) C as a (dim*dimC) x dim
    matrix, rows flattened (m, c) row-major."""

    coalgebra: Coalgebra
    dim: int
    coaction: Matrix

    def __post_init__(self):
        n = self.coalgebra.dim
        if self.coaction.rows != self.dim * n or self.coaction.cols != self.dim:
            raise ValueError("coaction shape does not match dim * dim(C) x dim")


@dataclass
class ComoduleReport:
    coassoc_ok: bool
    counit_ok: bool

    @property
    def valid(self) -> bool:
        return self.coassoc_ok and self.counit_ok


def comodule_validate(m: Comodule) -> ComoduleReport:
    """(rho (x) id) rho = (id (x) Delta) rho and (id (x) eps) rho = id, exactly."""
    c = m.coalgebra
    n = c.dim
    rho = m.coaction
    lhs = rho.kron(Matrix.identity(n)) @ rho
    rhs = Matrix.identity(m.dim).kron(c.delta_matrix()) @ rho
    counit = Matrix.identity(m.dim).kron(c.eps_matrix()) @ rho
    return ComoduleReport(lhs == rhs, counit == Matrix.identity(m.dim))


def regular_comodule(c: Coalgebra) -> Comodule:
    """C over itself, coaction = comultiplication."""
    return Comodule(c, c.dim, c.delta_matrix())


def graded_comodule(c: Coalgebra, grades: list) -> Comodule:
    """Vertex-graded vector space over a linearized set: basis vector i sits
    in degree grades[i] (a basis label of c)."""
    n = c.dim
    m = len(grades)
    entries = {}
    for i, label in enumerate(grades):
        entries[(i * n + c.index(label), i)] = ONE
    return Comodule(c, m, Matrix(m * n, m, entries))


def trivial_comodule(c: Coalgebra, dim: int) -> Comodule:
    """Only over the singleton coalgebra is rho = id (x) 1 a comodule."""
    if c.dim != 1:
        raise ValueError("trivial comodule needs the singleton coalgebra")
    return Comodule(c, dim, Matrix(dim, dim, {(i, i): ONE for i in range(dim)}))


def corestrict(f: CoalgebraMap, m: Comodule) -> Comodule:
    """Push a C-comodule forward along f: C -> D by postcomposing the coaction."""
    if m.coalgebra != f.source:
        raise ValueError("comodule does not live over the map's source")
    rho = Matrix.identity(m.dim).kron(f.mat) @ m.coaction
    return Comodule(f.target, m.dim, rho)


def left_coaction_of_map(f: CoalgebraMap) -> Matrix:
    """C as a left D-comodule via lambda = (f (x) id) Delta_C; shape
    (dim D * dim C) x dim C."""
    c = f.source
    return f.mat.kron(Matrix.identity(c.dim)) @ c.delta_matrix()


def left_coaction_of_opposite_comodule(m: Comodule) -> Matrix:
    """Translate a right D^o-comodule into a left D-coaction matrix."""
    d = m.coalgebra  # = D^o structurally; only the matrix shuffle matters
    n = d.dim
    entries = {}
    for (rc, col), v in m.coaction.entries.items():
        x, dd = divmod(rc, n)
        entries[(dd * m.dim + x, col)] = v
    return Matrix(n * m.dim, m.dim, entries)


@dataclass(frozen=True)
class Cotensor:
    """N box_D C: kernel basis (columns of inclusion into N (x) C) plus the
    induced right C-comodule structure on the kernel."""

    inclusion: Matrix        # (dim N * dim C) x w
    comodule: Comodule       # over C, dim w


def cotensor(n_mod: Comodule, lam: Matrix, c: Coalgebra) -> Cotensor:
    """Cotensor of a right D-comodule with a left D-comodule structure on C.

    lam is the left coaction C -> D (x) C.  The induced coaction on the
    kernel is id (x) Delta restricted; its coordinates are solved exactly.
    """
    d = n_mod.coalgebra
    nc, nd, m = c.dim, d.dim, n_mod.dim
    if lam.rows != nd * nc or lam.cols != nc:
        raise ValueError("left coaction shape mismatch")
    op = n_mod.coaction.kron(Matrix.identity(nc)) - Matrix.identity(m).kron(lam)
    basis = kernel(op)  # (m * nc) x w
    w = basis.cols
    induced = Matrix.identity(m).kron(c.delta_matrix()) @ basis  # (m nc nc) x w
    coords = solve_matrix(basis.kron(Matrix.identity(nc)), induced)
    if coords is None:
        raise AssertionError("induced coaction does not restrict to the cotensor")
    como = Comodule(c, w, coords)
    report = comodule_validate(como)
    if not report.valid:
        raise AssertionError("induced cotensor coaction fails the comodule laws")
    return Cotensor(basis, como)


def coinduce(f: CoalgebraMap, n_mod: Comodule) -> Cotensor:
    """The right adjoint on objects: N |-> N box_D C along f: C -> D."""
    if n_mod.coalgebra != f.target:
        raise ValueError("comodule does not live over the map's target")
    return cotensor(n_mod, left_coaction_of_map(f), f.source)


def comodule_hom_space(a: Comodule, b: Comodule) -> Matrix:
    """Basis of the space of comodule maps a -> b, as flattened matrices.

    phi (b.dim x a.dim) is a comodule map iff rho_b phi = (phi (x) id) rho_a;
    returns the kernel of that linear condition (columns = basis, row index
    flattens (row, col) of phi row-major).
    """
    if a.coalgebra != b.coalgebra:
        raise ValueError("comodules live over different coalgebras")
    n = a.coalgebra.dim
    rows = b.dim * n * a.dim
    cols = b.dim * a.dim
    entries = {}
    # (rho_b phi)[(y, c), x] = sum_z rho_b[(y, c), z] phi[z, x]
    for ((yc), z) in b.coaction.entries:
        v = b.coaction.entries[(yc, z)]
        for x in range(a.dim):
            entries[(yc * a.dim + x, z * a.dim + x)] = entries.get((yc * a.dim + x, z * a.dim + x), ZERO) + v
    # ((phi (x) id) rho_a)[(y, c), x] = sum_z phi[y, z] rho_a[(z, c), x]
    for ((zc), x) in a.coaction.entries:
        v = a.coaction.entries[(zc, x)]
        z, cc = divmod(zc, n)
        for y in range(b.dim):
            key = ((y * n + cc) * a.dim + x, y * a.dim + z)
            entries[key] = entries.get(key, ZERO) - v
    return kernel(Matrix(rows, cols, entries))


def adjunction_check(f: CoalgebraMap, m: Comodule, n_mod: Comodule) -> dict:
    """Verify the corestriction -| coinduction adjunction on given objects.

    Checks both triangle identities by explicit matrix construction and the
    hom-set dimension bijection Hom_D(f_* m, n) = Hom_C(m, f^* n).
    Returns a dict of named booleans (all True on success).
    """
    if m.coalgebra != f.source or n_mod.coalgebra != f.target:
        raise ValueError("objects do not match the map's source/target")
    nc = f.source.dim
    fm = corestrict(f, m)
    gn = coinduce(f, n_mod)
    # unit at m: rho_m lands in the cotensor f^* f_* m; solve for coordinates
    gfm = coinduce(f, fm)
    eta_m = solve_matrix(gfm.inclusion, m.coaction)
    results = {}
    results["unit_lands_in_cotensor"] = eta_m is not None
    if eta_m is None:
        return results
    # counit at n: id (x) eps_C on the cotensor inclusion
    eps_n = Matrix.identity(n_mod.dim).kron(f.source.eps_matrix()) @ gn.inclusion
    # triangle 1: eps_{f_* m} . f_*(eta_m) = id on f_* m
    eps_fm = Matrix.identity(fm.dim).kron(f.source.eps_matrix()) @ gfm.inclusion
    results["triangle_corestriction"] = (eps_fm @ eta_m) == Matrix.identity(m.dim)
    # triangle 2: f^*(eps_n) . eta_{f^* n} = id on f^* n
    gfgn = coinduce(f, corestrict(f, gn.comodule))
    eta_gn = solve_matrix(gfgn.inclusion, gn.comodule.coaction)
    results["unit_at_cotensor_lands"] = eta_gn is not None
    if eta_gn is None:
        return results
    g_eps = solve_matrix(gn.inclusion, eps_n.kron(Matrix.identity(nc)) @ gfgn.inclusion)
    results["counit_image_in_cotensor"] = g_eps is not None
    if g_eps is None:
        return results
    results["triangle_coinduction"] = (g_eps @ eta_gn) == Matrix.identity(gn.comodule.dim)
    # hom-set dimension bijection
    dim_left = comodule_hom_space(fm, n_mod).cols
    dim_right = comodule_hom_space(m, gn.comodule).cols
    results["hom_dims_agree"] = dim_left == dim_right
    return results


# -- JSON format ------------------------------------------------------------

def quiver_to_json_dict(q: ClassicalQuiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "edges": [{"name": e[0], "s": e[1], "t": e[2]} for e in q.edges],
    }


def quiver_from_json_dict(data: dict) -> ClassicalQuiver:
    return ClassicalQuiver(
        vertices=tuple(data["vertices"]),
        edges=tuple((e["name"], e["s"], e["t"]) for e in data["edges"]),
    )


def dump_quiver_json(q: ClassicalQuiver) -> str:
    return json.dumps(quiver_to_json_dict(q), indent=2, sort_keys=True) + "\n"


def load_quiver_json(text: str) -> ClassicalQuiver:
    return quiver_from_json_dict(json.loads(text))
