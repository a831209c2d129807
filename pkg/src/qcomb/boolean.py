"""Quantum Boolean algebras: structure maps, exhaustive axiom checks,
complement and weak de Morgan laws, negation uniqueness probes.

Axioms are verified as equalities of composed linear maps on tensor powers
of the carrier, never by symbolic Sweedler manipulation; a pass is a proof
for the instance at hand.  The unit isomorphism B (x) k{.} = B is the strict
basis bijection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .coalgebra import Coalgebra, linearize, opposite, tensor
from .exact import Matrix, ONE, ZERO
from .maps import CoalgebraMap, check_coalgebra_map


def _tau(n: int) -> Matrix:
    """Transposition of tensor factors on B (x) B."""
    return Matrix(n * n, n * n, {(j * n + i, i * n + j): ONE for i in range(n) for j in range(n)})


def _mid_swap(n: int) -> Matrix:
    """id (x) tau (x) id on B^(x4)."""
    entries = {}
    n3, n2 = n ** 3, n ** 2
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    entries[(a * n3 + c * n2 + b * n + d, a * n3 + b * n2 + c * n + d)] = ONE
    return Matrix(n ** 4, n ** 4, entries)


@dataclass(frozen=True)
class QBoolStructure:
    """Carrier coalgebra with bottom/top/meet/join maps and optional negation.

    The four structure maps are verified coalgebra maps on construction
    (meet and join against the tensor square); a negation, when present,
    must be an involutive coalgebra map into the co-opposite.
    """

    carrier: Coalgebra
    bot: CoalgebraMap
    top: CoalgebraMap
    meet: CoalgebraMap
    join: CoalgebraMap
    neg: Optional[Matrix] = None

    @staticmethod
    def verify(carrier, bot_mat, top_mat, meet_mat, join_mat, neg=None) -> "QBoolStructure":
        from .coalgebra import singleton

        pt = singleton()
        bb = tensor(carrier, carrier)
        q = QBoolStructure(
            carrier=carrier,
            bot=CoalgebraMap.verify(pt, carrier, bot_mat),
            top=CoalgebraMap.verify(pt, carrier, top_mat),
            meet=CoalgebraMap.verify(bb, carrier, meet_mat),
            join=CoalgebraMap.verify(bb, carrier, join_mat),
            neg=neg,
        )
        if neg is not None:
            ok, why = check_negation_structure(carrier, neg)
            if not ok:
                raise ValueError(f"negation fails structural invariants: {why}")
        return q

    @property
    def dim(self) -> int:
        return self.carrier.dim


def check_negation_structure(carrier: Coalgebra, neg: Matrix):
    """neg must be an involutive coalgebra map into the co-opposite."""
    if neg.rows != carrier.dim or neg.cols != carrier.dim:
        return False, "shape"
    report = check_coalgebra_map(neg, carrier, opposite(carrier))
    if not report.ok:
        return False, f"not a coalgebra map into the co-opposite ({report.violation})"
    if neg @ neg != Matrix.identity(carrier.dim):
        return False, "not involutive"
    return True, None


@dataclass
class AxiomReport:
    """Per-axiom verdicts; a counterexample is the basis tuple of the first
    differing column of the two composed maps."""

    results: dict  # name -> (ok, counterexample labels or None)

    @property
    def all_pass(self) -> bool:
        return all(ok for ok, _ in self.results.values())

    def failures(self) -> list:
        return [name for name, (ok, _) in self.results.items() if not ok]


def _first_bad_column(lhs: Matrix, rhs: Matrix, basis, arity: int):
    """Decode the first differing column into a tuple of basis labels."""
    n = len(basis)
    diff = lhs - rhs
    if diff.is_zero():
        return None
    col = min(c for (_, c) in diff.entries)
    idx = [(col // (n ** pos)) % n for pos in range(arity - 1, -1, -1)]
    return tuple(basis[i] for i in idx)


def check_lattice_axioms(q: QBoolStructure) -> AxiomReport:
    """The ten bounded-distributive-lattice diagrams, checked exhaustively."""
    n = q.dim
    eye = Matrix.identity(n)
    m, j = q.meet.mat, q.join.mat
    d = q.carrier.delta_matrix()
    eps = q.carrier.eps_matrix()
    tau = _tau(n)
    mid = _mid_swap(n)
    top_col, bot_col = q.top.mat, q.bot.mat
    absorb_rhs = eye.kron(eps)  # b (x) b' |-> eps(b') b
    pre_distr = d.kron(Matrix.identity(n * n))

    checks = {
        "associativity_meet": (m @ m.kron(eye), m @ eye.kron(m), 3),
        "associativity_join": (j @ j.kron(eye), j @ eye.kron(j), 3),
        "identity_meet": (m @ eye.kron(top_col), eye, 1),
        "identity_join": (j @ eye.kron(bot_col), eye, 1),
        "commutativity_meet": (m @ tau, m, 2),
        "commutativity_join": (j @ tau, j, 2),
        "absorption_meet_join": (m @ eye.kron(j) @ d.kron(eye), absorb_rhs, 2),
        "absorption_join_meet": (j @ eye.kron(m) @ d.kron(eye), absorb_rhs, 2),
        "distributivity_join_over_meet": (
            j @ eye.kron(m),
            m @ j.kron(j) @ mid @ pre_distr,
            3,
        ),
        "distributivity_meet_over_join": (
            m @ eye.kron(j),
            j @ m.kron(m) @ mid @ pre_distr,
            3,
        ),
    }
    results = {}
    for name, (lhs, rhs, arity) in checks.items():
        ok = lhs == rhs
        results[name] = (ok, None if ok else _first_bad_column(lhs, rhs, q.carrier.basis, arity))
    return AxiomReport(results)


def check_complement(q: QBoolStructure) -> AxiomReport:
    """The four complement identities, on every basis element."""
    if q.neg is None:
        raise ValueError("structure carries no negation")
    n = q.dim
    eye = Matrix.identity(n)
    d = q.carrier.delta_matrix()
    eps = q.carrier.eps_matrix()
    to_top = q.top.mat @ eps
    to_bot = q.bot.mat @ eps
    checks = {
        "complement_neg_join": (q.join.mat @ q.neg.kron(eye) @ d, to_top),
        "complement_join_neg": (q.join.mat @ eye.kron(q.neg) @ d, to_top),
        "complement_neg_meet": (q.meet.mat @ q.neg.kron(eye) @ d, to_bot),
        "complement_meet_neg": (q.meet.mat @ eye.kron(q.neg) @ d, to_bot),
    }
    results = {}
    for name, (lhs, rhs) in checks.items():
        ok = lhs == rhs
        results[name] = (ok, None if ok else _first_bad_column(lhs, rhs, q.carrier.basis, 1))
    return AxiomReport(results)


def check_weak_de_morgan(q: QBoolStructure) -> AxiomReport:
    """The four weak de Morgan identities on every basis pair (b, b')."""
    if q.neg is None:
        raise ValueError("structure carries no negation")
    n = q.dim
    d = q.carrier.delta_matrix()
    eps = q.carrier.eps_matrix()
    m, j = q.meet.mat, q.join.mat
    pre = _mid_swap(n) @ d.kron(d)  # b (x) b' |-> b1 (x) b'1 (x) b2 (x) b'2
    neg2 = q.neg.kron(q.neg)
    to_top = q.top.mat @ eps.kron(eps)
    to_bot = q.bot.mat @ eps.kron(eps)
    checks = {
        "de_morgan_1_top": (j @ j.kron(m @ neg2) @ pre, to_top),
        "de_morgan_1_bot": (m @ j.kron(m @ neg2) @ pre, to_bot),
        "de_morgan_2_top": (j @ m.kron(j @ neg2) @ pre, to_top),
        "de_morgan_2_bot": (m @ m.kron(j @ neg2) @ pre, to_bot),
    }
    results = {}
    for name, (lhs, rhs) in checks.items():
        ok = lhs == rhs
        results[name] = (ok, None if ok else _first_bad_column(lhs, rhs, q.carrier.basis, 2))
    return AxiomReport(results)


def negation_uniqueness_probe(q: QBoolStructure, candidate: Matrix) -> str:
    """Classify a candidate negation.

    "equal": candidate coincides with the canonical negation entrywise.
    "not structural": fails involutivity / the anti-coalgebra property.
    "not a negation": structural but fails the complement axiom.
    "uniqueness violation": a complement-satisfying candidate that differs
    (never observed; would contradict the uniqueness theorem).
    """
    if q.neg is None:
        raise ValueError("structure carries no canonical negation to probe against")
    ok, _ = check_negation_structure(q.carrier, candidate)
    if not ok:
        return "not structural"
    trial = QBoolStructure(q.carrier, q.bot, q.top, q.meet, q.join, candidate)
    if not check_complement(trial).all_pass:
        return "not a negation"
    if candidate == q.neg:
        return "equal"
    return "uniqueness violation"


# -- classical Boolean tables and their linearization ------------------------

@dataclass(frozen=True)
class LatticeTable:
    """Finite bounded-lattice data: total meet/join tables plus bounds.

    neg is optional; when present it must be the complement map.
    """

    elements: tuple
    meet: dict  # (a, b) -> element
    join: dict
    bot: str
    top: str
    neg: Optional[dict] = None

    def check(self) -> None:
        els = self.elements
        if len(set(els)) != len(els):
            raise ValueError("duplicate elements")
        for table, name in ((self.meet, "meet"), (self.join, "join")):
            if set(table) != {(a, b) for a in els for b in els}:
                raise ValueError(f"{name} table is not total")
            for v in table.values():
                if v not in els:
                    raise ValueError(f"{name} table leaves the element set")
        if self.bot not in els or self.top not in els:
            raise ValueError("bounds are not elements")
        for a in els:
            for b in els:
                if self.meet[(a, b)] != self.meet[(b, a)] or self.join[(a, b)] != self.join[(b, a)]:
                    raise ValueError(f"commutativity fails at ({a}, {b})")
                for c in els:
                    if self.meet[(a, self.meet[(b, c)])] != self.meet[(self.meet[(a, b)], c)]:
                        raise ValueError(f"meet associativity fails at ({a}, {b}, {c})")
                    if self.join[(a, self.join[(b, c)])] != self.join[(self.join[(a, b)], c)]:
                        raise ValueError(f"join associativity fails at ({a}, {b}, {c})")
                    if self.join[(a, self.meet[(b, c)])] != self.meet[(self.join[(a, b)], self.join[(a, c)])]:
                        raise ValueError(f"distributivity fails at ({a}, {b}, {c})")
                if self.meet[(a, self.join[(a, b)])] != a or self.join[(a, self.meet[(a, b)])] != a:
                    raise ValueError(f"absorption fails at ({a}, {b})")
            if self.meet[(a, self.top)] != a or self.join[(a, self.bot)] != a:
                raise ValueError(f"bound identities fail at {a}")
        if self.neg is not None:
            if set(self.neg) != set(els):
                raise ValueError("neg table is not total")
            for a in els:
                if self.meet[(a, self.neg[a])] != self.bot or self.join[(a, self.neg[a])] != self.top:
                    raise ValueError(f"neg is not a complement at {a}")

    def find_complements(self):
        """Complement map if every element has one, else (None, witness)."""
        out = {}
        for a in self.elements:
            matches = [
                b
                for b in self.elements
                if self.meet[(a, b)] == self.bot and self.join[(a, b)] == self.top
            ]
            if not matches:
                return None, a
            out[a] = matches[0]
        return out, None


def powerset_lattice(n_atoms: int) -> LatticeTable:
    """The Boolean algebra of subsets of n_atoms atoms, elements as bitmask names."""
    els = tuple(f"s{m}" for m in range(2 ** n_atoms))
    num = {e: i for i, e in enumerate(els)}
    meet = {(a, b): els[num[a] & num[b]] for a in els for b in els}
    join = {(a, b): els[num[a] | num[b]] for a in els for b in els}
    full = 2 ** n_atoms - 1
    neg = {a: els[num[a] ^ full] for a in els}
    return LatticeTable(els, meet, join, els[0], els[full], neg)


def chain_lattice(n: int) -> LatticeTable:
    """The n-element chain 0 < 1 < ... < n-1 (complement-free for n >= 3)."""
    els = tuple(f"c{i}" for i in range(n))
    meet = {(a, b): els[min(int(a[1:]), int(b[1:]))] for a in els for b in els}
    join = {(a, b): els[max(int(a[1:]), int(b[1:]))] for a in els for b in els}
    return LatticeTable(els, meet, join, els[0], els[-1])


def two_element_boolean() -> LatticeTable:
    els = ("f", "t")
    meet = {(a, b): "t" if a == b == "t" else "f" for a in els for b in els}
    join = {(a, b): "f" if a == b == "f" else "t" for a in els for b in els}
    return LatticeTable(els, meet, join, "f", "t", {"f": "t", "t": "f"})


def linearize_boolean(table: LatticeTable, name: Optional[str] = None) -> QBoolStructure:
    """Linear extension of classical lattice tables to a quantum structure."""
    table.check()
    carrier = linearize(table.elements, name=name)
    n = carrier.dim
    pos = {e: i for i, e in enumerate(table.elements)}
    meet_mat = Matrix(
        n, n * n, {(pos[table.meet[(a, b)]], pos[a] * n + pos[b]): ONE for a in table.elements for b in table.elements}
    )
    join_mat = Matrix(
        n, n * n, {(pos[table.join[(a, b)]], pos[a] * n + pos[b]): ONE for a in table.elements for b in table.elements}
    )
    bot_mat = Matrix(n, 1, {(pos[table.bot], 0): ONE})
    top_mat = Matrix(n, 1, {(pos[table.top], 0): ONE})
    neg_mat = None
    if table.neg is not None:
        neg_mat = Matrix(n, n, {(pos[table.neg[a]], pos[a]): ONE for a in table.elements})
    return QBoolStructure.verify(carrier, bot_mat, top_mat, meet_mat, join_mat, neg_mat)


def involutive_permutation_matrices(n: int):
    """All involutive basis permutations of an n-dim space, as matrices.

    For a linearized set these are exactly the involutive coalgebra
    endomaps, hence the full candidate pool for negation probes.
    """
    for perm in permutations(range(n)):
        if all(perm[perm[i]] == i for i in range(n)):
            yield Matrix(n, n, {(perm[i], i): ONE for i in range(n)})


# -- JSON format ------------------------------------------------------------

def table_to_json_dict(t: LatticeTable) -> dict:
    els = list(t.elements)
    out = {
        "elements": els,
        "meet": [[t.meet[(a, b)] for b in els] for a in els],
        "join": [[t.join[(a, b)] for b in els] for a in els],
        "bot": t.bot,
        "top": t.top,
    }
    if t.neg is not None:
        out["neg"] = [t.neg[a] for a in els]
    return out


def table_from_json_dict(data: dict) -> LatticeTable:
    els = tuple(data["elements"])
    meet = {(a, b): data["meet"][i][j] for i, a in enumerate(els) for j, b in enumerate(els)}
    join = {(a, b): data["join"][i][j] for i, a in enumerate(els) for j, b in enumerate(els)}
    neg = None
    if data.get("neg") is not None:
        neg = {a: data["neg"][i] for i, a in enumerate(els)}
    return LatticeTable(els, meet, join, data["bot"], data["top"], neg)


def dump_table_json(t: LatticeTable) -> str:
    return json.dumps(table_to_json_dict(t), indent=2, sort_keys=True) + "\n"


def load_table_json(text: str) -> LatticeTable:
    return table_from_json_dict(json.loads(text))
