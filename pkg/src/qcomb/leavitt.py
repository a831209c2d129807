"""Leavitt path algebra of a finite quiver via confluent rewriting, plus
stable quiver representations and their equivalence with modules.

Generators: vertex idempotents 1_v, edge generators p^e, ghost generators
p*_e.  Unit conventions follow the bimodule rules  p^e . 1_v = d_{s(e),v} p^e
and  1_v . p^e = d_{t(e),v} p^e  (so edges compose on the side of their
source), with the contragredient rules for ghosts.  Rewrite rules:

  (CK1)  p*_e p^f       -> d_{e,f} 1_{s(e)}            (when t(e) = t(f))
  (CK2)  p^g p*_g       -> 1_v - sum_{f in t^-1(v), f != g} p^f p*_f
         at the designated special edge g of each vertex v with incoming
         edges (lexicographically smallest label, for determinism)
  plus vertex absorption and annihilation of non-composable juxtapositions.

Two relation modes: "standard" imposes the vertex resolution only at
vertices with a nonempty incoming fiber (the classical Leavitt path
algebra); "absolute" additionally kills 1_v at vertices with empty incoming
fiber.  Normal forms are monomials p^alpha p*_beta with a common deep
vertex, excluding the pair that ends in the special edge on both sides.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .exact import Matrix, ONE, Scalar, ZERO
from .quivers import ClassicalQuiver

_LABEL = re.compile(r"^[A-Za-z0-9_]+$")


class DiscretenessError(ValueError):
    """The Leavitt construction needs a classical quiver or an explicit
    discreteness witness for the source; neither was supplied."""


def _check_labels(q: ClassicalQuiver) -> None:
    for name in [e[0] for e in q.edges] + list(q.vertices):
        if not _LABEL.match(name):
            raise ValueError(f"label {name!r} unusable in the text format (alphanumeric + _ only)")


@dataclass(frozen=True)
class RewriteContext:
    """Quiver-and-mode data the rewriting engine consults."""

    quiver: ClassicalQuiver
    mode: str = "standard"

    def __post_init__(self):
        if self.mode not in ("standard", "absolute"):
            raise ValueError(f"unknown mode {self.mode!r}")
        _check_labels(self.quiver)

    def special(self, v: str) -> Optional[str]:
        inc = self.quiver.incoming(v)
        return inc[0] if inc else None

    def dead(self, v: str) -> bool:
        return self.mode == "absolute" and not self.quiver.incoming(v)

    # units of a letter: ('v', v) | ('e', e) | ('g', e)
    def left_unit(self, letter) -> str:
        kind, label = letter
        if kind == "v":
            return label
        return self.quiver.tgt(label) if kind == "e" else self.quiver.src(label)

    def right_unit(self, letter) -> str:
        kind, label = letter
        if kind == "v":
            return label
        return self.quiver.src(label) if kind == "e" else self.quiver.tgt(label)


@dataclass(frozen=True)
class LpaMonomial:
    """Normal-form monomial p^alpha p*_beta.

    alpha lists edge factors in product order; beta lists ghost factors in
    product order.  vertex is the shared deep vertex s(alpha[-1]) =
    s(beta[0]) (the monomial itself when both paths are empty).
    """

    vertex: str
    alpha: tuple = ()
    beta: tuple = ()

    def word(self) -> tuple:
        if not self.alpha and not self.beta:
            return (("v", self.vertex),)
        return tuple(("e", a) for a in self.alpha) + tuple(("g", b) for b in self.beta)

    def key(self) -> tuple:
        return (self.vertex, self.alpha, self.beta)

    def text(self) -> str:
        if not self.alpha and not self.beta:
            return f"v({self.vertex})"
        alpha = ".".join(self.alpha) if self.alpha else f"v({self.vertex})"
        if not self.beta:
            return alpha
        return f"{alpha} ; {'.'.join(self.beta)}*"


def _monomial_ok(ctx: RewriteContext, m: LpaMonomial) -> None:
    q = ctx.quiver
    if m.vertex not in q.vertices:
        raise ValueError(f"unknown vertex {m.vertex!r}")
    for i in range(len(m.alpha) - 1):
        if q.src(m.alpha[i]) != q.tgt(m.alpha[i + 1]):
            raise ValueError("alpha is not composable")
    for i in range(len(m.beta) - 1):
        if q.tgt(m.beta[i]) != q.src(m.beta[i + 1]):
            raise ValueError("beta is not composable")
    if m.alpha and q.src(m.alpha[-1]) != m.vertex:
        raise ValueError("alpha does not end at the stated vertex")
    if m.beta and q.src(m.beta[0]) != m.vertex:
        raise ValueError("beta does not start at the stated vertex")
    if m.alpha and m.beta and m.alpha[-1] == m.beta[0]:
        e = m.alpha[-1]
        if ctx.special(q.tgt(e)) == e:
            raise ValueError("monomial is not in normal form (special pair at the junction)")


class LpaElement:
    """Linear combination of normal-form monomials; immutable by convention."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: RewriteContext, terms=None):
        self.ctx = ctx
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Scalar.of(coeff)
            if coeff:
                _monomial_ok(ctx, mono)
                if self.ctx.mode == "absolute" and _touches_dead(ctx, mono.word()):
                    raise ValueError("monomial touches a dead vertex in absolute mode")
                clean[mono] = coeff
        self.terms = clean

    # -- ring structure --

    @staticmethod
    def zero(ctx: RewriteContext) -> "LpaElement":
        return LpaElement(ctx)

    @staticmethod
    def vertex(ctx: RewriteContext, v: str) -> "LpaElement":
        return normalize_words(ctx, {(("v", v),): ONE})

    @staticmethod
    def edge(ctx: RewriteContext, e: str) -> "LpaElement":
        return normalize_words(ctx, {(("e", e),): ONE})

    @staticmethod
    def ghost(ctx: RewriteContext, e: str) -> "LpaElement":
        return normalize_words(ctx, {(("g", e),): ONE})

    @staticmethod
    def one(ctx: RewriteContext) -> "LpaElement":
        """Sum of the vertex idempotents (finite quivers only)."""
        out = LpaElement.zero(ctx)
        for v in ctx.quiver.vertices:
            out = out + LpaElement.vertex(ctx, v)
        return out

    def _same_ring(self, other: "LpaElement") -> None:
        if self.ctx != other.ctx:
            raise ValueError("elements live in different Leavitt path algebras")

    def __add__(self, other: "LpaElement") -> "LpaElement":
        self._same_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, ZERO) + c
        return LpaElement(self.ctx, terms)

    def __sub__(self, other: "LpaElement") -> "LpaElement":
        self._same_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, ZERO) - c
        return LpaElement(self.ctx, terms)

    def scale(self, c) -> "LpaElement":
        c = Scalar.of(c)
        return LpaElement(self.ctx, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "LpaElement") -> "LpaElement":
        self._same_ring(other)
        words = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                w = m1.word() + m2.word()
                words[w] = words.get(w, ZERO) + c1 * c2
        return normalize_words(self.ctx, words)

    def __eq__(self, other) -> bool:
        return isinstance(other, LpaElement) and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: m.text()):
            parts.append(f"{self.terms[mono]} * {mono.text()}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LpaElement({self.text()})"


def _touches_dead(ctx: RewriteContext, word: tuple) -> bool:
    for letter in word:
        if ctx.dead(ctx.left_unit(letter)) or ctx.dead(ctx.right_unit(letter)):
            return True
    return False


def _redexes(ctx: RewriteContext, word: tuple) -> list:
    """All (position, rule) rewrite opportunities in a word."""
    out = []
    if ctx.mode == "absolute" and _touches_dead(ctx, word):
        out.append((0, "dead"))
    for i in range(len(word) - 1):
        left, right = word[i], word[i + 1]
        if ctx.right_unit(left) != ctx.left_unit(right):
            out.append((i, "mismatch"))
            continue
        if left[0] == "v":
            out.append((i, "vleft"))
        elif right[0] == "v":
            out.append((i, "vright"))
        elif left[0] == "g" and right[0] == "e":
            out.append((i, "ck1"))
        elif left[0] == "e" and right[0] == "g" and left[1] == right[1]:
            e = left[1]
            if ctx.special(ctx.quiver.tgt(e)) == e:
                out.append((i, "ck2"))
    return out


def _apply(ctx: RewriteContext, word: tuple, redex) -> list:
    """Apply one redex; returns a list of (coefficient, word) results."""
    i, rule = redex
    q = ctx.quiver
    if rule in ("dead", "mismatch"):
        return []
    if rule == "vleft":
        return [(ONE, word[:i] + word[i + 1:])]
    if rule == "vright":
        return [(ONE, word[:i + 1] + word[i + 2:])]
    if rule == "ck1":
        e, f = word[i][1], word[i + 1][1]
        if e != f:
            return []
        return [(ONE, word[:i] + (("v", q.src(e)),) + word[i + 2:])]
    if rule == "ck2":
        e = word[i][1]
        v = q.tgt(e)
        results = [(ONE, word[:i] + (("v", v),) + word[i + 2:])]
        for f in q.incoming(v):
            if f != e:
                results.append((-ONE, word[:i] + (("e", f), ("g", f)) + word[i + 2:]))
        return results
    raise AssertionError(f"unknown rule {rule}")


def _word_to_monomial(ctx: RewriteContext, word: tuple) -> LpaMonomial:
    if len(word) == 1 and word[0][0] == "v":
        return LpaMonomial(word[0][1])
    alpha = tuple(l for k, l in word if k == "e")
    beta = tuple(l for k, l in word if k == "g")
    if alpha:
        vertex = ctx.quiver.src(alpha[-1])
    else:
        vertex = ctx.quiver.src(beta[0])
    return LpaMonomial(vertex, alpha, beta)


def normalize_words(ctx: RewriteContext, words: dict, rng=None, step_cap: int = 2_000_000) -> LpaElement:
    """Confluent rewriting of a linear combination of raw words.

    rng, when given, picks the next word and redex at random; the result is
    independent of those choices (the confluence property under test).
    """
    pending = {}
    for w, c in words.items():
        c = Scalar.of(c)
        if c:
            pending[tuple(w)] = pending.get(tuple(w), ZERO) + c
    out: dict = {}
    steps = 0
    while pending:
        steps += 1
        if steps > step_cap:
            raise RuntimeError("rewriting step cap exceeded (non-termination?)")
        if rng is None:
            word = next(iter(pending))
        else:
            word = rng.choice(sorted(pending))
        coeff = pending.pop(word)
        if not coeff:
            continue
        if not word:
            raise ValueError("empty word (use LpaElement.one for the unit)")
        redexes = _redexes(ctx, word)
        if not redexes:
            mono = _word_to_monomial(ctx, word)
            acc = out.get(mono, ZERO) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
            continue
        redex = redexes[0] if rng is None else rng.choice(redexes)
        for factor, new_word in _apply(ctx, word, redex):
            acc = pending.get(new_word, ZERO) + coeff * factor
            if acc:
                pending[new_word] = acc
            else:
                pending.pop(new_word, None)
    return LpaElement(ctx, out)


def lpa_normalize(ctx: RewriteContext, word, coeff=ONE, rng=None) -> LpaElement:
    """Normalize a single raw word (sequence of ('v'|'e'|'g', label) letters)."""
    for kind, label in word:
        if kind == "v":
            if label not in ctx.quiver.vertices:
                raise ValueError(f"unknown vertex {label!r}")
        elif kind in ("e", "g"):
            ctx.quiver.edge(label)
        else:
            raise ValueError(f"unknown letter kind {kind!r}")
    return normalize_words(ctx, {tuple(word): Scalar.of(coeff)}, rng=rng)


# -- text format -------------------------------------------------------------

def parse_element(ctx: RewriteContext, text: str) -> LpaElement:
    """Parse the element text format; the result is normalized.

    Grammar: terms joined by " + "; term = "<scalar> * <mono>"; mono is
    "v(label)", a dotted edge path, or "<alpha-part> ; <beta-path>*".
    """
    text = text.strip()
    if text == "0":
        return LpaElement.zero(ctx)
    total = {}
    for part in text.split(" + "):
        if "*" not in part:
            raise ValueError(f"term {part!r} lacks a coefficient (write 'c * m')")
        coef_str, _, mono_str = part.partition("*")
        coeff = Scalar.parse(coef_str.strip())
        word = _parse_mono(mono_str.strip())
        total[word] = total.get(word, ZERO) + coeff
    return normalize_words(ctx, total)


def _parse_path(s: str) -> tuple:
    s = s.strip()
    m = re.match(r"^v\(([A-Za-z0-9_]+)\)$", s)
    if m:
        return (("v", m.group(1)),)
    labels = [p.strip() for p in s.split(".")]
    if not all(_LABEL.match(p) for p in labels):
        raise ValueError(f"bad path {s!r}")
    return tuple(("e", p) for p in labels)


def _parse_mono(s: str) -> tuple:
    if ";" in s:
        alpha_str, _, beta_str = s.partition(";")
        beta_str = beta_str.strip()
        if not beta_str.endswith("*"):
            raise ValueError(f"ghost part of {s!r} must end with *")
        alpha = _parse_path(alpha_str)
        beta = tuple(("g", l) for _, l in _parse_path(beta_str[:-1]))
        if any(k == "v" for k, _ in beta):
            raise ValueError("ghost part cannot be a vertex")
        return alpha + beta
    return _parse_path(s)


def format_element(x: LpaElement) -> str:
    return x.text()


# -- relation audit ----------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    """One presented relation: lhs = rhs, both raw word combinations."""

    name: str
    lhs: tuple  # ((coeff, word), ...)
    rhs: tuple


def cp_relation_audit(ctx: RewriteContext) -> list:
    """The full generator/relation presentation for the quiver and mode."""
    q = ctx.quiver
    rels = []
    for u in q.vertices:
        for v in q.vertices:
            rhs = ((ONE, (("v", u),)),) if u == v else ()
            rels.append(Relation(f"vertex[{u},{v}]", ((ONE, (("v", u), ("v", v))),), rhs))
    for name, s, t in q.edges:
        for v in q.vertices:
            rels.append(Relation(
                f"edge_left_unit[{v},{name}]",
                ((ONE, (("v", v), ("e", name))),),
                ((ONE, (("e", name),)),) if v == t else (),
            ))
            rels.append(Relation(
                f"edge_right_unit[{name},{v}]",
                ((ONE, (("e", name), ("v", v))),),
                ((ONE, (("e", name),)),) if v == s else (),
            ))
            rels.append(Relation(
                f"ghost_left_unit[{v},{name}]",
                ((ONE, (("v", v), ("g", name))),),
                ((ONE, (("g", name),)),) if v == s else (),
            ))
            rels.append(Relation(
                f"ghost_right_unit[{name},{v}]",
                ((ONE, (("g", name), ("v", v))),),
                ((ONE, (("g", name),)),) if v == t else (),
            ))
    for e_name, _, e_t in q.edges:
        for f_name, _, f_t in q.edges:
            rhs = ((ONE, (("v", q.src(e_name)),)),) if e_name == f_name else ()
            rels.append(Relation(
                f"ck1[{e_name},{f_name}]",
                ((ONE, (("g", e_name), ("e", f_name))),),
                rhs,
            ))
    for v in q.vertices:
        inc = q.incoming(v)
        if inc:
            rels.append(Relation(
                f"ck2[{v}]",
                ((ONE, (("v", v),)),),
                tuple((ONE, (("e", e), ("g", e))) for e in inc),
            ))
        elif ctx.mode == "absolute":
            rels.append(Relation(f"dead_vertex[{v}]", ((ONE, (("v", v),)),), ()))
    return rels


def relation_holds(ctx: RewriteContext, rel: Relation) -> bool:
    lhs = normalize_words(ctx, {w: c for c, w in rel.lhs})
    rhs = normalize_words(ctx, {w: c for c, w in rel.rhs})
    return lhs == rhs


def basis_closure(ctx: RewriteContext, cap: int = 10_000) -> list:
    """Brute-force closure of the generators under multiplication.

    Returns the sorted list of normal-form monomials reachable from the
    generators; for acyclic quivers this is the whole basis.
    """
    gens = []
    for v in ctx.quiver.vertices:
        gens.append(LpaElement.vertex(ctx, v))
    for name, _, _ in ctx.quiver.edges:
        gens.append(LpaElement.edge(ctx, name))
        gens.append(LpaElement.ghost(ctx, name))
    known = set()
    for g in gens:
        known.update(g.terms)
    frontier = set(known)
    while frontier:
        if len(known) > cap:
            raise RuntimeError("closure cap exceeded (cyclic quiver?)")
        new = set()
        for m1 in sorted(known, key=LpaMonomial.key):
            for m2 in sorted(frontier, key=LpaMonomial.key):
                for a, b in ((m1, m2), (m2, m1)):
                    prod = LpaElement(ctx, {a: ONE}) * LpaElement(ctx, {b: ONE})
                    for mono in prod.terms:
                        if mono not in known:
                            new.add(mono)
        known.update(new)
        frontier = new
    return sorted(known, key=LpaMonomial.key)


# -- stable representations and modules --------------------------------------

@dataclass(frozen=True)
class StableRep:
    """Vertex spaces N_v with a retraction pair per vertex.

    omega[v]: N_v -> sum over incoming edges e of N_{s(e)} (blocks stacked in
    sorted-edge-label order); sigma[v] is the wrong-way map back.
    """

    quiver: ClassicalQuiver
    dims: dict
    omega: dict
    sigma: dict

    def __post_init__(self):
        q = self.quiver
        if set(self.dims) != set(q.vertices):
            raise ValueError("dims must cover the vertices")
        for v in q.vertices:
            total = sum(self.dims[q.src(e)] for e in q.incoming(v))
            om = self.omega.get(v, Matrix.zeros(total, self.dims[v]))
            sg = self.sigma.get(v, Matrix.zeros(self.dims[v], total))
            if om.rows != total or om.cols != self.dims[v]:
                raise ValueError(f"omega[{v}] has the wrong shape")
            if sg.rows != self.dims[v] or sg.cols != total:
                raise ValueError(f"sigma[{v}] has the wrong shape")

    def _block_ranges(self, v: str):
        q = self.quiver
        out = {}
        offset = 0
        for e in q.incoming(v):
            d = self.dims[q.src(e)]
            out[e] = (offset, offset + d)
            offset += d
        return out

    def _total_in(self, v: str) -> int:
        return sum(self.dims[self.quiver.src(e)] for e in self.quiver.incoming(v))

    def edge_action(self, e: str) -> Matrix:
        """Block of omega for edge e: the action of p^e, N_{t(e)} -> N_{s(e)}."""
        q = self.quiver
        v = q.tgt(e)
        lo, hi = self._block_ranges(v)[e]
        om = self.omega.get(v, Matrix.zeros(self._total_in(v), self.dims[v]))
        entries = {}
        for (r, c), val in om.entries.items():
            if lo <= r < hi:
                entries[(r - lo, c)] = val
        return Matrix(hi - lo, self.dims[v], entries)

    def ghost_action(self, e: str) -> Matrix:
        """Block of sigma for edge e: the action of p*_e, N_{s(e)} -> N_{t(e)}."""
        q = self.quiver
        v = q.tgt(e)
        lo, hi = self._block_ranges(v)[e]
        sg = self.sigma.get(v, Matrix.zeros(self.dims[v], self._total_in(v)))
        entries = {}
        for (r, c), val in sg.entries.items():
            if lo <= c < hi:
                entries[(r, c - lo)] = val
        return Matrix(self.dims[v], hi - lo, entries)


@dataclass
class StableReport:
    retraction_failures: list   # vertices where sigma omega != id
    counit_failures: list       # edge pairs (g, f) violating the second equation
    skipped_vertices: list      # empty-fiber vertices not constrained (standard mode)

    @property
    def ok(self) -> bool:
        return not (self.retraction_failures or self.counit_failures)


def stable_rep_check(rep: StableRep, mode: str = "standard") -> StableReport:
    """Both stability equations, blockwise and exact.

    The retraction equation sigma . omega = id is the vertex resolution, so
    in standard mode it is imposed only at vertices with incoming edges; the
    counit-stability equation is the blockwise identity
    A_g B_f = delta_{g,f} id over edge pairs with a common target.
    """
    q = rep.quiver
    retraction, counit, skipped = [], [], []
    for v in q.vertices:
        inc = q.incoming(v)
        if not inc and mode == "standard":
            skipped.append(v)
            continue
        total = sum(rep.dims[q.src(e)] for e in inc)
        om = rep.omega.get(v, Matrix.zeros(total, rep.dims[v]))
        sg = rep.sigma.get(v, Matrix.zeros(rep.dims[v], total))
        if sg @ om != Matrix.identity(rep.dims[v]):
            retraction.append(v)
    for g, _, gt in q.edges:
        for f, _, ft in q.edges:
            if gt != ft:
                continue
            prod = rep.edge_action(g) @ rep.ghost_action(f)
            expect = Matrix.identity(rep.dims[q.src(g)]) if g == f else Matrix.zeros(
                rep.dims[q.src(g)], rep.dims[q.src(f)]
            )
            if prod != expect:
                counit.append((g, f))
    return StableReport(retraction, counit, skipped)


@dataclass(frozen=True)
class LpaModule:
    """Right-module data: per-edge action matrices over vertex-graded spaces.

    act_edge[e] is the action of p^e (N_{t(e)} -> N_{s(e)}), act_ghost[e]
    the action of p*_e (N_{s(e)} -> N_{t(e)}).
    """

    ctx: RewriteContext
    dims: dict
    act_edge: dict
    act_ghost: dict

    def offsets(self):
        out = {}
        offset = 0
        for v in self.ctx.quiver.vertices:
            out[v] = offset
            offset += self.dims[v]
        return out, offset

    def _embed(self, mat: Matrix, dom_v: str, cod_v: str) -> Matrix:
        offs, total = self.offsets()
        entries = {}
        for (r, c), val in mat.entries.items():
            entries[(offs[cod_v] + r, offs[dom_v] + c)] = val
        return Matrix(total, total, entries)

    def letter_operator(self, letter) -> Matrix:
        """The total-space operator of n |-> n <| letter."""
        kind, label = letter
        offs, total = self.offsets()
        q = self.ctx.quiver
        if kind == "v":
            d = self.dims[label]
            return Matrix(total, total, {(offs[label] + i, offs[label] + i): ONE for i in range(d)})
        if kind == "e":
            return self._embed(self.act_edge[label], q.tgt(label), q.src(label))
        if kind == "g":
            return self._embed(self.act_ghost[label], q.src(label), q.tgt(label))
        raise ValueError(f"unknown letter kind {kind!r}")

    def word_operator(self, word) -> Matrix:
        """Letters act in product order: the first letter is applied first."""
        _, total = self.offsets()
        acc = Matrix.identity(total)
        for letter in word:
            acc = self.letter_operator(letter) @ acc
        return acc

    def element_operator(self, x: LpaElement) -> Matrix:
        _, total = self.offsets()
        acc = Matrix.zeros(total, total)
        for mono, coeff in x.terms.items():
            acc = acc + self.word_operator(mono.word()).scale(coeff)
        return acc


def module_relation_failures(module: LpaModule) -> list:
    """Names of audited relations the action matrices violate."""
    bad = []
    for rel in cp_relation_audit(module.ctx):
        _, total = module.offsets()
        lhs = Matrix.zeros(total, total)
        for coeff, word in rel.lhs:
            lhs = lhs + module.word_operator(word).scale(coeff)
        rhs = Matrix.zeros(total, total)
        for coeff, word in rel.rhs:
            rhs = rhs + module.word_operator(word).scale(coeff)
        if lhs != rhs:
            bad.append(rel.name)
    return bad


def rep_to_module(rep: StableRep, mode: str = "standard") -> LpaModule:
    """Translate a checked stable representation into module action data.

    The translation is the blockwise mates formula; every audited relation
    is re-verified against the action matrices, with failures pinpointed.
    """
    report = stable_rep_check(rep, mode=mode)
    if not report.ok:
        raise ValueError(f"representation is not stable: {report}")
    ctx = RewriteContext(rep.quiver, mode)
    module = LpaModule(
        ctx=ctx,
        dims=dict(rep.dims),
        act_edge={e[0]: rep.edge_action(e[0]) for e in rep.quiver.edges},
        act_ghost={e[0]: rep.ghost_action(e[0]) for e in rep.quiver.edges},
    )
    bad = module_relation_failures(module)
    if bad:
        raise ValueError(f"module action violates relations: {bad}")
    return module


def module_to_rep(module: LpaModule) -> StableRep:
    """Invert the translation: reassemble the blockwise retraction data."""
    q = module.ctx.quiver
    omega, sigma = {}, {}
    for v in q.vertices:
        inc = q.incoming(v)
        total = sum(module.dims[q.src(e)] for e in inc)
        om_entries, sg_entries = {}, {}
        offset = 0
        for e in inc:
            d = module.dims[q.src(e)]
            for (r, c), val in module.act_edge[e].entries.items():
                om_entries[(offset + r, c)] = val
            for (r, c), val in module.act_ghost[e].entries.items():
                sg_entries[(r, offset + c)] = val
            offset += d
        omega[v] = Matrix(total, module.dims[v], om_entries)
        sigma[v] = Matrix(module.dims[v], total, sg_entries)
    return StableRep(q, dict(module.dims), omega, sigma)
