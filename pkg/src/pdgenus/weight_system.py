"""The partial-dual genus polynomial and its four-term-relation machinery.

The polynomial of a diagram (or map) G sums z**genus(G^A) over all 2^e
edge subsets A; its coefficients always add up to 2^e.  A function on
chord diagrams is a weight system when the alternating sum over every
four-term quadruple vanishes; the checks in this module verify that
exhaustively at desk scale, compute the dimensions of the quotient
spaces, and exercise the structural properties (multiplicativity over
connected sums, dependence only on the interlace graph).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .diagrams import ChordDiagram, enumerate_diagrams, product
from .maps import CombinatorialMap
from .polynomials import IntPolynomial, RationalMatrix


class NotABasisError(ValueError):
    """The proposed basis is linearly dependent modulo the four-term span."""


class NoSolutionError(ValueError):
    """The target diagram is not expressible over the proposed basis."""


# -- the genus polynomial -------------------------------------------------


def _genus_distribution(m: CombinatorialMap, explicit: bool) -> IntPolynomial:
    e = m.num_edges
    counts = [0] * (e // 2 + 2)
    for mask in range(1 << e):
        if explicit:
            g = m.partial_dual(mask).genus()
        else:
            g = m.genus_of_partial_dual(mask)
        counts[g] += 1
    return IntPolynomial(counts)


@lru_cache(maxsize=None)
def _gamma_of_word(word: tuple[int, ...]) -> IntPolynomial:
    return _genus_distribution(ChordDiagram(word).to_map(), explicit=False)


def pd_genus_polynomial(
    g: ChordDiagram | CombinatorialMap, method: str = "fast"
) -> IntPolynomial:
    """Genus generating function over all partial duals of ``g``.

    ``method="fast"`` computes each genus from two spanning-subgraph
    boundary counts; ``method="explicit"`` builds every partial dual.
    The two must agree everywhere (enforced by the test suite).
    """
    if method not in ("fast", "explicit"):
        raise ValueError(f"unknown method {method!r}")
    if isinstance(g, ChordDiagram):
        if method == "fast":
            return _gamma_of_word(g.canonical().word)
        g = g.to_map()
    return _genus_distribution(g, explicit=(method == "explicit"))


@dataclass(frozen=True)
class GenusPolynomialResult:
    """A computed genus polynomial together with its diagram."""

    diagram: ChordDiagram
    polynomial: IntPolynomial
    subset_count: int

    def to_json(self) -> dict:
        return {
            "diagram": list(self.diagram.word),
            "polynomial": self.polynomial.to_json(),
            "subset_count": self.subset_count,
        }


def pd_genus_report(diagram: ChordDiagram, method: str = "fast") -> GenusPolynomialResult:
    canon = diagram.canonical()
    poly = pd_genus_polynomial(canon, method=method)
    return GenusPolynomialResult(canon, poly, 1 << canon.order)


# -- four-term quadruples --------------------------------------------------


@dataclass(frozen=True)
class FourTermQuadruple:
    """Four diagrams with signs +, -, +, - whose alternating sum must vanish.

    The diagrams agree outside one endpoint of a moving chord, which sits
    in the four slots adjacent to the two endpoints of a fixed chord:
    just before the first, just after the first, just before the second,
    just after the second.
    """

    diagrams: tuple[ChordDiagram, ChordDiagram, ChordDiagram, ChordDiagram]

    SIGNS = (1, -1, 1, -1)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(d.word for d in self.diagrams)

    def residual(self, invariant: Callable[[ChordDiagram], IntPolynomial]):
        d1, d2, d3, d4 = self.diagrams
        return invariant(d1) - invariant(d2) + invariant(d3) - invariant(d4)

    def words(self) -> list[str]:
        return [str(d) for d in self.diagrams]


def _normalize_key(four: tuple) -> tuple:
    """Quotient out the choice of which fixed-chord endpoint comes first.

    Swapping the endpoint roles permutes the quadruple as (3, 4, 1, 2),
    which leaves the alternating sum unchanged; keep the lesser variant.
    """
    return min(four, four[2:] + four[:2])


def _quadruples_from_word(word: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All quadruple keys arising from one diagram's (a, b, endpoint) choices."""
    diagram = ChordDiagram(word)
    labels = diagram.labels()
    out = []
    for moving in labels:
        m1, m2 = diagram.endpoints(moving)
        for fixed in labels:
            if fixed == moving:
                continue
            for q in (m1, m2):
                rest = list(word[:q]) + list(word[q + 1 :])
                r, s = (i for i, x in enumerate(rest) if x == fixed)
                four = []
                for slot in (r, r + 1, s, s + 1):
                    placed = tuple(rest[:slot] + [moving] + rest[slot:])
                    four.append(_canonical(placed))
                out.append(_normalize_key(tuple(four)))
    return out


def _canonical(word: tuple[int, ...]) -> tuple[int, ...]:
    return ChordDiagram(word).canonical().word


@lru_cache(maxsize=None)
def generate_4T_quadruples(n: int) -> tuple[FourTermQuadruple, ...]:
    """Every four-term quadruple on diagrams of order n, deduplicated.

    For each diagram, each ordered pair (moving chord, fixed chord) and
    each choice of the moving chord's free endpoint yields one quadruple;
    duplicates are removed by the canonical forms of the four diagrams.
    """
    if n < 2:
        raise ValueError("four-term quadruples need order >= 2")
    keys: set[tuple[tuple[int, ...], ...]] = set()
    for diagram in enumerate_diagrams(n):
        keys.update(_quadruples_from_word(diagram.word))
    return tuple(
        FourTermQuadruple(tuple(ChordDiagram(w) for w in key))
        for key in sorted(keys)
    )


def _quadruple_chunk(words: tuple[tuple[int, ...], ...]) -> set:
    keys: set = set()
    for word in words:
        keys.update(_quadruples_from_word(word))
    return keys


def _gamma_chunk(words: tuple[tuple[int, ...], ...]) -> dict:
    return {w: _gamma_of_word(w).coeffs for w in words}


def check_4T(
    n: int,
    invariant: Callable[[ChordDiagram], IntPolynomial] | None = None,
    threads: int = 1,
) -> dict:
    """Evaluate the alternating sum on every quadruple of order n.

    Returns a report with the quadruple count and all nonzero residuals;
    for the genus polynomial the expected violation count is zero.  With
    ``threads > 1`` and the default invariant, quadruple generation and
    polynomial evaluation are sharded over worker processes (results are
    merged and ordered canonically, so the report is schedule-independent).
    """
    use_default = invariant is None
    if threads > 1 and use_default:
        words = tuple(d.word for d in enumerate_diagrams(n))
        chunks = [words[i::threads] for i in range(threads)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            key_sets = list(pool.map(_quadruple_chunk, chunks))
            gamma_maps = list(pool.map(_gamma_chunk, chunks))
        keys = sorted(set().union(*key_sets))
        gamma: dict[tuple[int, ...], IntPolynomial] = {}
        for part in gamma_maps:
            gamma.update({w: IntPolynomial(cs) for w, cs in part.items()})
        quadruples = tuple(
            FourTermQuadruple(tuple(ChordDiagram(w) for w in key)) for key in keys
        )

        def evaluate(d: ChordDiagram) -> IntPolynomial:
            return gamma[d.word]

    else:
        quadruples = generate_4T_quadruples(n)
        evaluate = (lambda d: pd_genus_polynomial(d)) if use_default else invariant

    violations = []
    for quad in quadruples:
        residual = quad.residual(evaluate)
        if residual:
            violations.append(
                {"quadruple": quad.words(), "residual": residual.to_json()}
            )
    return {
        "n": n,
        "quadruples": len(quadruples),
        "violations": len(violations),
        "violations_list": violations,
    }


# -- the quotient by the four-term span ------------------------------------


def _diagram_index(n: int) -> dict[tuple[int, ...], int]:
    return {d.word: i for i, d in enumerate(enumerate_diagrams(n))}


def quadruple_vectors(n: int) -> list[tuple[int, ...]]:
    """Distinct four-term relation vectors in the diagram basis of order n."""
    index = _diagram_index(n)
    vectors: set[tuple[int, ...]] = set()
    for quad in generate_4T_quadruples(n):
        row = [0] * len(index)
        for sign, d in zip(FourTermQuadruple.SIGNS, quad.diagrams):
            row[index[d.word]] += sign
        if any(row):
            vectors.add(tuple(row))
    return sorted(vectors)


def dim_quotient(n: int) -> int:
    """Dimension of the span of order-n diagrams modulo all four-term relations."""
    if n == 0:
        return 1
    if n == 1:
        return 1
    vectors = quadruple_vectors(n)
    rank = RationalMatrix(vectors, num_cols=len(_diagram_index(n))).rank()
    return len(enumerate_diagrams(n)) - rank


def express_modulo_4T(
    diagram: ChordDiagram, basis: Sequence[ChordDiagram]
) -> list[Fraction]:
    """Coefficients of a diagram's class over a basis of the quotient space.

    Solves diagram = sum(c_i * basis_i) + (four-term combination) exactly;
    any weight system f then satisfies f(diagram) = sum(c_i * f(basis_i)).
    """
    n = diagram.order
    if any(b.order != n for b in basis):
        raise NotABasisError("basis diagrams must have the same order as the target")
    index = _diagram_index(n)
    size = len(index)
    relation_rows = quadruple_vectors(n)
    basis_cols = []
    for b in basis:
        col = [0] * size
        col[index[b.canonical().word]] += 1
        basis_cols.append(col)

    rank_relations = RationalMatrix(relation_rows, num_cols=size).rank()
    rank_with_basis = RationalMatrix(
        list(relation_rows) + basis_cols, num_cols=size
    ).rank()
    if rank_with_basis != rank_relations + len(basis):
        raise NotABasisError("basis is dependent modulo the four-term relations")

    target = [0] * size
    target[index[diagram.canonical().word]] = 1
    matrix = RationalMatrix.from_columns(basis_cols + [list(r) for r in relation_rows])
    solution = matrix.solve(target)
    if solution is None:
        raise NoSolutionError("target is outside the span of basis and relations")
    return solution[: len(basis)]


# -- structural property suites ---------------------------------------------


def check_multiplicativity(n1: int, n2: int) -> dict:
    """Verify gamma(product) = gamma(D1) * gamma(D2) over all pairs and cuts."""
    checked = 0
    violations = []
    for d1 in enumerate_diagrams(n1):
        g1 = pd_genus_polynomial(d1)
        for d2 in enumerate_diagrams(n2):
            g2 = pd_genus_polynomial(d2)
            expected = g1 * g2
            for cut1 in range(max(2 * n1, 1)):
                for cut2 in range(max(2 * n2, 1)):
                    joined = product(d1, d2, cut1, cut2)
                    checked += 1
                    actual = pd_genus_polynomial(joined)
                    if actual != expected:
                        violations.append(
                            {
                                "factors": [str(d1), str(d2)],
                                "cuts": [cut1, cut2],
                                "product": str(joined),
                                "expected": expected.to_json(),
                                "actual": actual.to_json(),
                            }
                        )
    return {
        "orders": [n1, n2],
        "checked": checked,
        "violations": len(violations),
        "violations_list": violations,
    }


def _graph_class_key(matrix: list[list[int]]) -> tuple[int, ...]:
    """Canonical form of a small graph: lex-least adjacency bits over all relabellings."""
    n = len(matrix)
    best = None
    for perm in itertools.permutations(range(n)):
        bits = tuple(
            matrix[perm[i]][perm[j]] for i in range(n) for j in range(i + 1, n)
        )
        if best is None or bits < best:
            best = bits
    return best if best is not None else ()


def check_intersection_graph_invariance(n: int) -> dict:
    """Group order-n diagrams by interlace-graph isomorphism; gamma must be constant per class."""
    classes: dict[tuple[int, ...], list[ChordDiagram]] = {}
    for d in enumerate_diagrams(n):
        classes.setdefault(_graph_class_key(d.interlace_graph()), []).append(d)
    violations = []
    summaries = []
    for key in sorted(classes):
        members = classes[key]
        polys = [pd_genus_polynomial(d) for d in members]
        summaries.append(
            {
                "size": len(members),
                "diagrams": [str(d) for d in members],
                "polynomial": polys[0].to_json(),
            }
        )
        if any(p != polys[0] for p in polys):
            violations.append(
                {
                    "diagrams": [str(d) for d in members],
                    "polynomials": [p.to_json() for p in polys],
                }
            )
    return {
        "n": n,
        "classes": len(classes),
        "violations": len(violations),
        "violations_list": violations,
        "class_list": summaries,
    }
