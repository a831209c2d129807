"""Finite-dimensional counital coassociative coalgebras.

A coalgebra is stored by its structure data: basis labels, the
comultiplication tensor delta (delta[k,i,j] = coefficient of c_i (x) c_j in
the comultiplication of c_k), the counit vector eps, and optionally a star
involution given as a basis permutation acting antilinearly on coefficients.

Constructors cover the families used throughout: linearized finite sets,
comatrix coalgebras, the truncated divided-power coalgebra of the additive
monoid, and decomposition coalgebras of finite categories.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .exact import Matrix, ONE, Scalar, Tensor3, Vector, ZERO, unit_vec, vec

BULLET = "•"  # the singleton's basis label
BOT = "⊥"
TOP = "⊤"


@dataclass(frozen=True)
class CategoryData:
    """A finite category given by explicit tables.

    `compose[(m1, m2)] = m1 after m2`; only composable pairs appear.
    """

    objects: tuple
    morphisms: tuple
    identity: dict  # object -> identity morphism
    compose: dict   # (m1, m2) -> m

    def check(self) -> None:
        idset = set(self.identity.values())
        if set(self.identity) != set(self.objects):
            raise ValueError("identity table does not cover the objects")
        for m in idset:
            if m not in self.morphisms:
                raise ValueError(f"identity {m!r} is not a listed morphism")
        for (m1, m2), m in self.compose.items():
            if m1 not in self.morphisms or m2 not in self.morphisms or m not in self.morphisms:
                raise ValueError("composition table mentions unknown morphisms")
        # identity laws: each morphism composes with exactly one identity per side
        for m in self.morphisms:
            lefts = [e for e in idset if self.compose.get((e, m)) == m]
            rights = [e for e in idset if self.compose.get((m, e)) == m]
            if len(lefts) != 1 or len(rights) != 1:
                raise ValueError(f"identity axioms fail at morphism {m!r}")
        for (a, b) in self.compose:
            for c in self.morphisms:
                if (b, c) in self.compose:
                    left = self.compose.get((self.compose[(a, b)], c))
                    right = self.compose.get((a, self.compose[(b, c)]))
                    if left != right or left is None:
                        raise ValueError(f"composition not associative at {(a, b, c)}")

    def has_trivial_endos(self) -> bool:
        """True when the only endomorphisms are the identities."""
        idset = set(self.identity.values())
        for m in self.morphisms:
            if m in idset:
                continue
            # m is an endomorphism iff it absorbs the same identity on both sides
            left = [e for e in idset if self.compose.get((e, m)) == m]
            right = [e for e in idset if self.compose.get((m, e)) == m]
            if left and right and left[0] == right[0]:
                return False
        return True

    def identities_factor_trivially(self) -> bool:
        """True when id_a = m1 o m2 forces m1 = m2 = id_a (no invertible pairs)."""
        idset = set(self.identity.values())
        for (m1, m2), m in self.compose.items():
            if m in idset and (m1, m2) != (m, m):
                return False
        return True


@dataclass(frozen=True)
class Coalgebra:
    name: str
    basis: tuple
    delta: Tensor3
    eps: Vector
    star: Optional[tuple] = None  # basis permutation: star[k] = index of c_k^*
    provenance: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.basis)
        if len(set(self.basis)) != n:
            raise ValueError("duplicate basis labels")
        if self.delta.dims != (n, n, n):
            raise ValueError("delta dimensions do not match the basis")
        if len(self.eps) != n:
            raise ValueError("eps length does not match the basis")
        if self.star is not None and sorted(self.star) != list(range(n)):
            raise ValueError("star is not a basis permutation")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Coalgebra)
            and self.basis == other.basis
            and self.delta == other.delta
            and self.eps == other.eps
            and self.star == other.star
        )

    def __hash__(self):
        return hash((self.basis, self.delta, self.eps, self.star))

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def delta_slice(self, k: int) -> Matrix:
        """The matrix S_k with (i, j) entry delta[k, i, j]."""
        return self.delta.slice0(k)

    def delta_matrix(self) -> Matrix:
        """Comultiplication as a dim^2 x dim matrix, rows flattened (i, j)."""
        n = self.dim
        entries = {}
        for (k, i, j), v in self.delta.entries.items():
            entries[(i * n + j, k)] = v
        return Matrix(n * n, n, entries)

    def eps_matrix(self) -> Matrix:
        return Matrix.row_vector(self.eps)

    def star_apply(self, coords: Vector) -> Vector:
        """The antilinear involution on an element's coordinates."""
        if self.star is None:
            raise ValueError(f"coalgebra {self.name!r} carries no star structure")
        out = [ZERO] * self.dim
        for k, v in enumerate(coords):
            if v:
                out[self.star[k]] = v.conjugate()
        return tuple(out)


@dataclass(frozen=True)
class Element:
    """An element of a coalgebra, as coordinates in its basis."""

    coalgebra: Coalgebra
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.coalgebra.dim:
            raise ValueError("coordinate length does not match the coalgebra")

    @staticmethod
    def basis(c: Coalgebra, label: str) -> "Element":
        return Element(c, unit_vec(c.dim, c.index(label)))

    def eps_value(self) -> Scalar:
        total = ZERO
        for e, v in zip(self.coalgebra.eps, self.coords):
            if e and v:
                total = total + e * v
        return total


@dataclass
class CoalgebraReport:
    coassoc_violations: list  # (k, i, j, l) index quadruples
    counit_violations: list   # ("left"|"right", k, j)
    star_violations: list     # description strings

    @property
    def valid(self) -> bool:
        return not (self.coassoc_violations or self.counit_violations or self.star_violations)


def validate(c: Coalgebra) -> CoalgebraReport:
    """Check coassociativity, the counit laws, and star compatibility.

    The report lists every violated instance by basis indices.
    """
    n = c.dim
    coassoc = []
    slices = [c.delta_slice(k) for k in range(n)]
    for k in range(n):
        # left[k]: coefficients of c_i (x) c_j (x) c_l from (Delta (x) id) Delta
        left = {}
        right = {}
        for (p, l), v in slices[k].entries.items():
            for (i, j), w in slices[p].entries.items():
                key = (i, j, l)
                left[key] = left.get(key, ZERO) + v * w
        for (i, q), v in slices[k].entries.items():
            for (j, l), w in slices[q].entries.items():
                key = (i, j, l)
                right[key] = right.get(key, ZERO) + v * w
        for key in sorted(set(left) | set(right)):
            if left.get(key, ZERO) != right.get(key, ZERO):
                i, j, l = key
                coassoc.append((k, i, j, l))
    counit = []
    for k in range(n):
        left = slices[k].transpose().apply(c.eps)   # sum_i eps[i] delta[k,i,j]
        right = slices[k].apply(c.eps)              # sum_j delta[k,i,j] eps[j]
        for j in range(n):
            if left[j] != (ONE if j == k else ZERO):
                counit.append(("left", k, j))
        for i in range(n):
            if right[i] != (ONE if i == k else ZERO):
                counit.append(("right", k, i))
    star_viol = []
    if c.star is not None:
        pi = c.star
        for k in range(n):
            if pi[pi[k]] != k:
                star_viol.append(f"star not involutive at {c.basis[k]}")
        for k in range(n):
            # Delta(c_k^*) must equal the flipped, entrywise-starred Delta(c_k)
            expected = {}
            for (i, j), v in slices[k].entries.items():
                expected[(pi[j], pi[i])] = v.conjugate()
            actual = dict(slices[pi[k]].entries)
            if expected != actual:
                star_viol.append(f"star does not flip the comultiplication at {c.basis[k]}")
            if c.eps[pi[k]] != c.eps[k].conjugate():
                star_viol.append(f"star does not preserve the counit at {c.basis[k]}")
    return CoalgebraReport(coassoc, counit, star_viol)


# -- constructors -----------------------------------------------------------

def linearize(labels, name: Optional[str] = None, identity_star: bool = False) -> Coalgebra:
    """The linearization of a finite set: every basis element group-like."""
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate labels")
    n = len(labels)
    delta = Tensor3((n, n, n), {(k, k, k): ONE for k in range(n)})
    eps = tuple(ONE for _ in range(n))
    return Coalgebra(
        name=name or f"k{{{','.join(labels)}}}",
        basis=labels,
        delta=delta,
        eps=eps,
        star=tuple(range(n)) if identity_star else None,
        provenance=("linearize",),
    )


def singleton() -> Coalgebra:
    return linearize((BULLET,), name="k{" + BULLET + "}")


def empty() -> Coalgebra:
    return linearize((), name="k{}")


def omega(with_star: bool = True) -> Coalgebra:
    """The linearized two truth values, basis (bot, top)."""
    return linearize((BOT, TOP), name="kOmega", identity_star=with_star)


def _comatrix_label(i: int, j: int, n: int) -> str:
    return f"d{i}{j}" if n <= 9 else f"d{i}_{j}"


def comatrix(n: int, transpose_star: bool = False) -> Coalgebra:
    """Comatrix coalgebra on basis d_ij with Delta(d_ik) = sum_j d_ij (x) d_jk."""
    if n < 1:
        raise ValueError("comatrix needs n >= 1")
    labels = tuple(_comatrix_label(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1))
    idx = {(i, j): (i - 1) * n + (j - 1) for i in range(1, n + 1) for j in range(1, n + 1)}
    entries = {}
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            for j in range(1, n + 1):
                entries[(idx[(i, k)], idx[(i, j)], idx[(j, k)])] = ONE
    eps = tuple(ONE if i == j else ZERO for i in range(1, n + 1) for j in range(1, n + 1))
    star = None
    if transpose_star:
        star = tuple(idx[(j, i)] for i in range(1, n + 1) for j in range(1, n + 1))
    return Coalgebra(
        name=f"comatrix({n})",
        basis=labels,
        delta=Tensor3((n * n,) * 3, entries),
        eps=eps,
        star=star,
        provenance=("fd_category", pair_category(n)),
    )


def fd_monoid_additive(n: int) -> Coalgebra:
    """Degrees 0..n of the additive-monoid coalgebra; a genuine subcoalgebra."""
    if n < 0:
        raise ValueError("degree bound must be >= 0")
    dim = n + 1
    entries = {}
    for k in range(dim):
        for a in range(k + 1):
            entries[(k, a, k - a)] = ONE
    eps = tuple(ONE if k == 0 else ZERO for k in range(dim))
    return Coalgebra(
        name=f"fd_monoid_additive({n})",
        basis=tuple(f"d{k}" for k in range(dim)),
        delta=Tensor3((dim,) * 3, entries),
        eps=eps,
        provenance=("fd_monoid_additive", n),
    )


def pair_category(n: int) -> CategoryData:
    """The pair category on {1..n}: arrows (i, j) from j to i, (i,j)o(j,k)=(i,k)."""
    objects = tuple(range(1, n + 1))
    morphisms = tuple((i, j) for i in objects for j in objects)
    identity = {i: (i, i) for i in objects}
    compose = {}
    for i in objects:
        for j in objects:
            for k in objects:
                compose[((i, j), (j, k))] = (i, k)
    return CategoryData(objects, morphisms, identity, compose)


def chain_category(n: int) -> CategoryData:
    """The poset 0 < 1 < ... < n-1 as a category."""
    objects = tuple(range(n))
    morphisms = tuple((b, a) for a in objects for b in objects if a <= b)  # (b, a): a -> b
    identity = {a: (a, a) for a in objects}
    compose = {}
    for (b, mid) in morphisms:
        for (mid2, a) in morphisms:
            if mid == mid2:
                compose[((b, mid), (mid2, a))] = (b, a)
    return CategoryData(objects, morphisms, identity, compose)


def discrete_category(labels) -> CategoryData:
    labels = tuple(labels)
    return CategoryData(
        objects=labels,
        morphisms=labels,
        identity={a: a for a in labels},
        compose={(a, a): a for a in labels},
    )


def fd_category(cat: CategoryData, name: Optional[str] = None) -> Coalgebra:
    """Decomposition coalgebra of a finite category.

    Delta counts ordered factorizations m = m1 o m2; eps is 1 on identities.
    """
    cat.check()
    basis = tuple(str(m) for m in cat.morphisms)
    pos = {m: k for k, m in enumerate(cat.morphisms)}
    n = len(basis)
    entries = {}
    for (m1, m2), m in cat.compose.items():
        key = (pos[m], pos[m1], pos[m2])
        entries[key] = entries.get(key, ZERO) + ONE
    idset = set(cat.identity.values())
    eps = tuple(ONE if m in idset else ZERO for m in cat.morphisms)
    return Coalgebra(
        name=name or "fd_category",
        basis=basis,
        delta=Tensor3((n, n, n), entries),
        eps=eps,
        provenance=("fd_category", cat),
    )


def opposite(c: Coalgebra) -> Coalgebra:
    """The co-opposite: flip the last two tensor indices."""
    entries = {(k, j, i): v for (k, i, j), v in c.delta.entries.items()}
    return Coalgebra(
        name=f"{c.name}^o",
        basis=c.basis,
        delta=Tensor3(c.delta.dims, entries),
        eps=c.eps,
        star=c.star,
        provenance=("opposite", c.provenance),
    )


def pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


def tensor(c1: Coalgebra, c2: Coalgebra) -> Coalgebra:
    """Tensor product coalgebra on ordered-pair basis, row-major flattening."""
    n1, n2 = c1.dim, c2.dim
    basis = tuple(pair_label(a, b) for a in c1.basis for b in c2.basis)
    entries = {}
    for (k1, i1, j1), v1 in c1.delta.entries.items():
        for (k2, i2, j2), v2 in c2.delta.entries.items():
            entries[(k1 * n2 + k2, i1 * n2 + i2, j1 * n2 + j2)] = v1 * v2
    eps = tuple(a * b for a in c1.eps for b in c2.eps)
    star = None
    if c1.star is not None and c2.star is not None:
        star = tuple(c1.star[k1] * n2 + c2.star[k2] for k1 in range(n1) for k2 in range(n2))
    n = n1 * n2
    return Coalgebra(
        name=f"{c1.name}(x){c2.name}",
        basis=basis,
        delta=Tensor3((n, n, n), entries),
        eps=eps,
        star=star,
    )


def cocommutative(c: Coalgebra) -> bool:
    return all(c.delta[(k, j, i)] == v for (k, i, j), v in c.delta.entries.items())


# -- JSON format ------------------------------------------------------------

def to_json_dict(c: Coalgebra) -> dict:
    delta = [
        [k, i, j, str(v)]
        for (k, i, j), v in sorted(c.delta.entries.items())
    ]
    out = {
        "name": c.name,
        "basis": list(c.basis),
        "delta": delta,
        "eps": [str(v) for v in c.eps],
    }
    if c.star is not None:
        out["star"] = [
            {"from": c.basis[k], "to": c.basis[c.star[k]]} for k in range(c.dim)
        ]
    return out


def from_json_dict(data: dict) -> Coalgebra:
    basis = tuple(data["basis"])
    n = len(basis)
    entries = {}
    for k, i, j, v in data["delta"]:
        entries[(int(k), int(i), int(j))] = Scalar.parse(v)
    eps = vec(Scalar.parse(v) for v in data["eps"])
    star = None
    if data.get("star") is not None:
        pos = {b: k for k, b in enumerate(basis)}
        perm = [None] * n
        for rule in data["star"]:
            perm[pos[rule["from"]]] = pos[rule["to"]]
        if any(p is None for p in perm):
            raise ValueError("star table does not cover the basis")
        star = tuple(perm)
    return Coalgebra(
        name=data.get("name", "coalgebra"),
        basis=basis,
        delta=Tensor3((n, n, n), entries),
        eps=eps,
        star=star,
    )


def dump_json(c: Coalgebra) -> str:
    return json.dumps(to_json_dict(c), indent=2, sort_keys=True) + "\n"


def load_json(text: str) -> Coalgebra:
    return from_json_dict(json.loads(text))
