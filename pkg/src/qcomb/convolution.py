"""The partial product of represented quantum sets and the dual algebra F(C).

Two coalgebra maps x1: C -> D1, x2: C -> D2 are an admissible pair when the
mixed Sweedler tensor is flip-symmetric on every basis element of C; exactly
then the pairing c |-> x1(c_(1)) (x) x2(c_(2)) is itself a coalgebra map into
the tensor coalgebra.  F(C) is the dual space of C with the convolution
product; its scalar-valued shadow of admissibility makes F partial
commutative, and families of orthogonal idempotents in F(C) are the same
thing as maps to linearized sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import Coalgebra, linearize, tensor
from .exact import Matrix, ONE, Scalar, Vector, ZERO, unit_vec
from .maps import CoalgebraMap, check_coalgebra_map


@dataclass(frozen=True)
class ConvElement:
    """A functional on C, i.e. an element of the dual algebra F(C)."""

    coalgebra: Coalgebra
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.coalgebra.dim:
            raise ValueError("coordinate length does not match the coalgebra")

    @staticmethod
    def dual_basis(c: Coalgebra, label: str) -> "ConvElement":
        return ConvElement(c, unit_vec(c.dim, c.index(label)))

    def __call__(self, coords: Vector) -> Scalar:
        total = ZERO
        for x, v in zip(self.coords, coords):
            if x and v:
                total = total + x * v
        return total

    def __add__(self, other: "ConvElement") -> "ConvElement":
        self._same_algebra(other)
        return ConvElement(self.coalgebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ConvElement") -> "ConvElement":
        self._same_algebra(other)
        return ConvElement(self.coalgebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "ConvElement":
        c = Scalar.of(c)
        return ConvElement(self.coalgebra, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _same_algebra(self, other: "ConvElement") -> None:
        if self.coalgebra != other.coalgebra:
            raise ValueError("functionals live on different coalgebras")


def conv_unit(c: Coalgebra) -> ConvElement:
    """The unit of F(C): the counit."""
    return ConvElement(c, c.eps)


def conv_mul(x: ConvElement, y: ConvElement) -> ConvElement:
    """(x * y)[k] = sum_{i,j} delta[k,i,j] x[i] y[j]."""
    x._same_algebra(y)
    c = x.coalgebra
    out = [ZERO] * c.dim
    for (k, i, j), v in c.delta.entries.items():
        if x.coords[i] and y.coords[j]:
            out[k] = out[k] + v * x.coords[i] * y.coords[j]
    return ConvElement(c, tuple(out))


def conv_power(x: ConvElement, m: int) -> ConvElement:
    if m < 1:
        raise ValueError("power must be >= 1")
    acc = x
    for _ in range(m - 1):
        acc = conv_mul(acc, x)
    return acc


def functionals_admissible(x: ConvElement, y: ConvElement) -> bool:
    """Scalar shadow of the pair condition: symmetric mixing on every basis index."""
    x._same_algebra(y)
    c = x.coalgebra
    acc = [ZERO] * c.dim
    for (k, i, j), v in c.delta.entries.items():
        term = x.coords[i] * y.coords[j] - x.coords[j] * y.coords[i]
        if term:
            acc[k] = acc[k] + v * term
    return not any(acc)


# -- admissible pairs and the pairing ---------------------------------------

@dataclass
class AdmissibleWitness:
    index: int          # first offending basis index of the common source
    label: str
    difference: Matrix  # the nonzero mixed tensor at that index, dim D1 x dim D2
    all_labels: tuple = ()  # every offending basis label, in basis order


@dataclass(frozen=True)
class AdmissiblePair:
    x1: CoalgebraMap
    x2: CoalgebraMap
    certified: bool


def _require_common_source(x1: CoalgebraMap, x2: CoalgebraMap) -> Coalgebra:
    if x1.source != x2.source:
        raise ValueError("maps do not share a source")
    if not (x1.verified and x2.verified):
        raise ValueError("maps must be verified coalgebra maps")
    return x1.source


def _mixing_difference(c: Coalgebra, cols1, cols2, k: int) -> dict:
    diff: dict = {}
    for (kk, i, j), v in c.delta.entries.items():
        if kk != k:
            continue
        for a, ua in enumerate(cols1[i]):
            if not ua:
                continue
            for b, wb in enumerate(cols2[j]):
                if wb:
                    key = (a, b)
                    diff[key] = diff.get(key, ZERO) + v * ua * wb
        for a, ua in enumerate(cols1[j]):
            if not ua:
                continue
            for b, wb in enumerate(cols2[i]):
                if wb:
                    key = (a, b)
                    diff[key] = diff.get(key, ZERO) - v * ua * wb
    return {key: v for key, v in diff.items() if v}


def is_admissible(x1: CoalgebraMap, x2: CoalgebraMap):
    """(True, None) or (False, witness) for the symmetric-mixing condition.

    The witness carries the first offending basis index with its nonzero
    difference tensor, plus the full list of offending labels.
    """
    c = _require_common_source(x1, x2)
    cols1 = [x1.mat.col(i) for i in range(c.dim)]
    cols2 = [x2.mat.col(i) for i in range(c.dim)]
    bad = []
    first_diff = None
    for k in range(c.dim):
        diff = _mixing_difference(c, cols1, cols2, k)
        if diff:
            bad.append(k)
            if first_diff is None:
                first_diff = diff
    if bad:
        witness = AdmissibleWitness(
            index=bad[0],
            label=c.basis[bad[0]],
            difference=Matrix(x1.target.dim, x2.target.dim, first_diff),
            all_labels=tuple(c.basis[k] for k in bad),
        )
        return False, witness
    return True, None


def admissible_pair(x1: CoalgebraMap, x2: CoalgebraMap) -> AdmissiblePair:
    ok, _ = is_admissible(x1, x2)
    return AdmissiblePair(x1, x2, certified=ok)


def pair(p: AdmissiblePair) -> CoalgebraMap:
    """The pairing map C -> D1 (x) D2 of a certified pair; output verified."""
    if not p.certified:
        raise ValueError("cannot pair an uncertified pair")
    c = _require_common_source(p.x1, p.x2)
    d1, d2 = p.x1.target, p.x2.target
    n2 = d2.dim
    entries = {}
    for (k, i, j), v in c.delta.entries.items():
        for a, ua in enumerate(p.x1.mat.col(i)):
            if not ua:
                continue
            for b, wb in enumerate(p.x2.mat.col(j)):
                if wb:
                    key = (a * n2 + b, k)
                    entries[key] = entries.get(key, ZERO) + v * ua * wb
    target = tensor(d1, d2)
    mat = Matrix(target.dim, c.dim, entries)
    return CoalgebraMap.verify(c, target, mat)


def partial_assoc_check(x1: CoalgebraMap, x2: CoalgebraMap, x3: CoalgebraMap) -> bool:
    """Left-nested admissibility holds iff right-nested does; nestings agree.

    With row-major flattening the two triple tensor targets share index order,
    so the produced matrices are compared literally.
    """
    _require_common_source(x1, x2)
    _require_common_source(x2, x3)
    ok12, _ = is_admissible(x1, x2)
    left_defined = False
    if ok12:
        p12 = pair(AdmissiblePair(x1, x2, True))
        ok_l, _ = is_admissible(p12, x3)
        left_defined = ok_l
    ok23, _ = is_admissible(x2, x3)
    right_defined = False
    if ok23:
        p23 = pair(AdmissiblePair(x2, x3, True))
        ok_r, _ = is_admissible(x1, p23)
        right_defined = ok_r
    if left_defined != right_defined:
        return False
    if not left_defined:
        return True
    left = pair(AdmissiblePair(pair(AdmissiblePair(x1, x2, True)), x3, True))
    right = pair(AdmissiblePair(x1, pair(AdmissiblePair(x2, x3, True)), True))
    return left.mat == right.mat


# -- orthogonal idempotents <-> maps to linearized sets ----------------------

def orthogonal_idempotent_family(f: CoalgebraMap) -> dict:
    """Rows of a verified map C -> kT, as the family {x_t} in F(C)."""
    if not f.verified:
        raise ValueError("map must be verified")
    target = f.target
    c = f.source
    return {label: ConvElement(c, f.mat.row(t)) for t, label in enumerate(target.basis)}


def check_orthogonal_family(family: dict):
    """Verify x_s * x_t = delta_{s,t} x_s and sum_t x_t = eps.

    Returns (True, None) or (False, failing pair / "sum").
    """
    labels = sorted(family)
    if not labels:
        raise ValueError("empty family")
    c = family[labels[0]].coalgebra
    for s in labels:
        for t in labels:
            prod = conv_mul(family[s], family[t])
            expect = family[s] if s == t else ConvElement(c, (ZERO,) * c.dim)
            if prod.coords != expect.coords:
                return False, (s, t)
    total = ConvElement(c, (ZERO,) * c.dim)
    for t in labels:
        total = total + family[t]
    if total.coords != c.eps:
        return False, "sum"
    return True, None


def assemble_orthogonal_family(family: dict, target: Coalgebra | None = None) -> CoalgebraMap:
    """Build the map C -> kT out of a complete orthogonal family; verified."""
    ok, bad = check_orthogonal_family(family)
    if not ok:
        raise ValueError(f"family violates orthogonality/completeness at {bad}")
    labels = sorted(family)
    c = next(iter(family.values())).coalgebra
    if target is None:
        target = linearize(tuple(labels))
    else:
        if sorted(target.basis) != labels:
            raise ValueError("target basis does not match the family index set")
    entries = {}
    for label, x in family.items():
        t = target.index(label)
        for k, v in enumerate(x.coords):
            if v:
                entries[(t, k)] = v
    return CoalgebraMap.verify(c, target, Matrix(target.dim, c.dim, entries))
