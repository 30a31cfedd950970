"""Chord diagrams as double-occurrence cyclic words.

A diagram of order n is a word of 2n labels around an oriented circle,
each label occurring exactly twice.  Diagrams are compared up to
rotation only (orientation-preserving homeomorphisms of the circle);
admitting reflections would merge distinct diagrams and break the
order-4 census of 18.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .maps import CombinatorialMap


class OddLengthError(ValueError):
    """The word has odd length, so some chord is missing an endpoint."""


class LabelCountError(ValueError):
    """Some label does not occur exactly twice."""


class CutOutOfRangeError(ValueError):
    """A product cut position is not a gap of the circle."""


class UnknownChordError(ValueError):
    """A chord label that does not occur in the diagram."""


class EmptyCaravanError(ValueError):
    """A caravan needs at least one camel."""


class ChordDiagram:
    """A double-occurrence word; equality and hashing use the canonical form."""

    __slots__ = ("word", "_canonical_word")

    def __init__(self, word: Iterable[int]) -> None:
        w = tuple(word)
        if len(w) % 2:
            raise OddLengthError(f"word of odd length {len(w)}")
        counts: dict[int, int] = {}
        for label in w:
            counts[label] = counts.get(label, 0) + 1
        for label, count in counts.items():
            if count != 2:
                raise LabelCountError(f"label {label!r} occurs {count} times, not 2")
        self.word = w
        self._canonical_word: tuple[int, ...] | None = None

    @classmethod
    def parse(cls, text: str) -> ChordDiagram:
        """Parse ``1 2 2 1 3 3`` or the compact per-character form ``abba cc``."""
        tokens = text.split()
        if not tokens:
            return cls(())
        try:
            return cls(int(tok) for tok in tokens)
        except ValueError:
            pass
        chars = [ch for ch in text if not ch.isspace()]
        labels: dict[str, int] = {}
        word = []
        for ch in chars:
            if ch not in labels:
                labels[ch] = len(labels) + 1
            word.append(labels[ch])
        return cls(word)

    @classmethod
    def from_json(cls, data: dict) -> ChordDiagram:
        return cls(data["word"])

    def to_json(self) -> dict:
        return {"word": list(self.word)}

    @property
    def order(self) -> int:
        return len(self.word) // 2

    def labels(self) -> tuple[int, ...]:
        """Chord labels in order of first occurrence."""
        seen: dict[int, None] = {}
        for label in self.word:
            seen.setdefault(label)
        return tuple(seen)

    def endpoints(self, label: int) -> tuple[int, int]:
        """The two word positions of a chord."""
        hits = [i for i, x in enumerate(self.word) if x == label]
        if len(hits) != 2:
            raise UnknownChordError(f"no chord labelled {label!r}")
        return (hits[0], hits[1])

    def canonical(self) -> ChordDiagram:
        """Relabel by first occurrence and take the lex-least of all rotations."""
        if self._canonical_word is None:
            self._canonical_word = _canonical_word(self.word)
        if self._canonical_word == self.word:
            return self
        result = ChordDiagram(self._canonical_word)
        result._canonical_word = result.word
        return result

    def is_canonical(self) -> bool:
        return self.canonical().word == self.word

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ChordDiagram)
            and self.canonical().word == other.canonical().word
        )

    def __hash__(self) -> int:
        return hash(self.canonical().word)

    def __lt__(self, other: ChordDiagram) -> bool:
        return self.canonical().word < other.canonical().word

    def __str__(self) -> str:
        return " ".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"ChordDiagram.parse({str(self)!r})"

    # -- the one-vertex ribbon graph ------------------------------------

    def to_map(self) -> CombinatorialMap:
        """The one-vertex ribbon graph of this diagram.

        Word positions become half-edges, sigma is the full rotation of
        the circle, and alpha pairs the two occurrences of each label.
        """
        n2 = len(self.word)
        sigma = tuple((i + 1) % n2 for i in range(n2))
        alpha = [0] * n2
        first: dict[int, int] = {}
        for i, label in enumerate(self.word):
            if label in first:
                alpha[first[label]] = i
                alpha[i] = first[label]
            else:
                first[label] = i
        # edges are ordered by minimal half-edge, i.e. by first occurrence
        edge_labels = tuple(self.word[i] for i in range(n2) if i < alpha[i])
        return CombinatorialMap(sigma, alpha, edge_labels)

    def genus(self) -> int:
        return self.to_map().genus()

    def boundary_count(self) -> int:
        return self.to_map().counts()[2]

    # -- interlacement ----------------------------------------------------

    def interlace_graph(self) -> list[list[int]]:
        """Symmetric 0/1 adjacency: chords interlace iff their endpoints alternate."""
        labels = self.labels()
        spans = [self.endpoints(label) for label in labels]
        n = len(labels)
        matrix = [[0] * n for _ in range(n)]
        for i in range(n):
            a, b = spans[i]
            for j in range(i + 1, n):
                inside = sum(1 for p in spans[j] if a < p < b)
                if inside == 1:
                    matrix[i][j] = matrix[j][i] = 1
        return matrix

    def interlace_sequence(self) -> InterlaceSequence:
        matrix = self.interlace_graph()
        counts = tuple(sorted(sum(row) for row in matrix))
        factors = []
        for component in self._interlace_components():
            factors.append(tuple(sorted(sum(matrix[i]) for i in component)))
        factors.sort(key=lambda f: (len(f), f))
        return InterlaceSequence(counts, tuple(factors))

    def _interlace_components(self) -> list[list[int]]:
        matrix = self.interlace_graph()
        n = len(matrix)
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in range(n):
                    if matrix[x][y] and not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def join_decompose(self) -> list[ChordDiagram]:
        """Maximal factorization as an iterated connected sum.

        A factor occupies a contiguous cyclic arc, and two chords belong
        to the same factor exactly when they are linked by a chain of
        interlacements; so the factors are the connected components of
        the interlace graph, each read off in circle order.
        """
        labels = self.labels()
        factors = []
        for component in self._interlace_components():
            keep = {labels[i] for i in component}
            sub = tuple(x for x in self.word if x in keep)
            factors.append(ChordDiagram(sub).canonical())
        factors.sort(key=lambda d: (d.order, d.word))
        return factors


@lru_cache(maxsize=None)
def _canonical_word(word: tuple[int, ...]) -> tuple[int, ...]:
    n2 = len(word)
    if n2 == 0:
        return ()
    best: tuple[int, ...] | None = None
    doubled = word + word
    for start in range(n2):
        relabel: dict[int, int] = {}
        out = []
        for i in range(start, start + n2):
            label = doubled[i]
            if label not in relabel:
                relabel[label] = len(relabel) + 1
            out.append(relabel[label])
        candidate = tuple(out)
        if best is None or candidate < best:
            best = candidate
    return best


@dataclass(frozen=True)
class InterlaceSequence:
    """Sorted per-chord interlacement counts, with the join factorization."""

    counts: tuple[int, ...]
    factors: tuple[tuple[int, ...], ...]

    @property
    def is_join(self) -> bool:
        return len(self.factors) > 1

    def __str__(self) -> str:
        if len(self.factors) <= 1:
            return "(" + ",".join(map(str, self.counts)) + ")"
        return "∨".join("(" + ",".join(map(str, f)) + ")" for f in self.factors)


@dataclass(frozen=True)
class MultiCircleDiagram:
    """A chord diagram on several circles, one per vertex of a ribbon graph.

    ``circles`` lists half-chord ids in circle order, ``pairing`` matches
    the two ends of each chord, and ``side`` says whether a chord attaches
    from the inside or outside of its circles.  Side flags affect only
    rendering and serialization, never genus computations (those go
    through the map).
    """

    circles: tuple[tuple[int, ...], ...]
    pairing: tuple[tuple[int, int], ...]
    side: tuple[str, ...]

    def __post_init__(self) -> None:
        elements = [h for circle in self.circles for h in circle]
        if sorted(elements) != list(range(len(elements))):
            raise ValueError("circles must cover half-chord ids 0..2n-1 exactly once")
        mate: dict[int, int] = {}
        for a, b in self.pairing:
            if a == b or a in mate or b in mate:
                raise ValueError("pairing is not a fixed-point-free involution")
            mate[a] = b
            mate[b] = a
        if sorted(mate) != list(range(len(elements))):
            raise ValueError("pairing does not match the circle elements")
        if len(self.side) != len(self.pairing):
            raise ValueError("one side flag per chord is required")
        if any(s not in ("in", "out") for s in self.side):
            raise ValueError("side flags must be 'in' or 'out'")

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    @property
    def num_chords(self) -> int:
        return len(self.pairing)

    def to_map(self) -> CombinatorialMap:
        size = 2 * len(self.pairing)
        sigma = [0] * size
        for circle in self.circles:
            for i, h in enumerate(circle):
                sigma[h] = circle[(i + 1) % len(circle)]
        alpha = [0] * size
        for a, b in self.pairing:
            alpha[a] = b
            alpha[b] = a
        return CombinatorialMap(sigma, alpha)

    def to_diagram(self) -> ChordDiagram:
        """The single-circle case back as an ordinary chord diagram."""
        if len(self.circles) != 1:
            raise ValueError(f"diagram lives on {len(self.circles)} circles, not one")
        mate = {a: b for a, b in self.pairing}
        mate.update({b: a for a, b in self.pairing})
        labels: dict[int, int] = {}
        word = []
        for h in self.circles[0]:
            key = min(h, mate[h])
            if key not in labels:
                labels[key] = len(labels) + 1
            word.append(labels[key])
        return ChordDiagram(word)

    def to_json(self) -> dict:
        return {
            "circles": [list(c) for c in self.circles],
            "pairing": [list(p) for p in self.pairing],
            "side": list(self.side),
        }

    @classmethod
    def from_json(cls, data: dict) -> MultiCircleDiagram:
        return cls(
            tuple(tuple(c) for c in data["circles"]),
            tuple(tuple(p) for p in data["pairing"]),
            tuple(data["side"]),
        )

    def __str__(self) -> str:
        return json.dumps(self.to_json())


def from_map(m: CombinatorialMap, side: Sequence[str] | None = None) -> MultiCircleDiagram:
    """Read a map as a chord diagram on one circle per vertex.

    Circles are the sigma-orbits in cyclic order (started at their minimal
    half-edge) and the pairing comes from alpha.  Chords attach from the
    inside by default.
    """
    circles = m.vertices()
    pairing = m.edges
    if side is None:
        side = ("in",) * len(pairing)
    return MultiCircleDiagram(circles, pairing, tuple(side))


def partial_dual_diagram(
    diagram: ChordDiagram, chords: Iterable[int]
) -> MultiCircleDiagram:
    """Partial dual of a one-vertex diagram, in chord-diagram language.

    Goes through the map: dualize the diagram's ribbon graph relative to
    the selected chords and read the result back as oriented circles.
    Untouched chords keep the "in" side flag, the replacement chord of
    each dualized edge is flagged "out"; the flags only affect rendering
    and serialization.
    """
    chord_set = set(chords)
    labels = diagram.labels()
    unknown = chord_set - set(labels)
    if unknown:
        raise UnknownChordError(f"no chord labelled {sorted(unknown)!r}")
    m = diagram.to_map()
    mask = 0
    for i, (a, _) in enumerate(m.edges):
        if diagram.word[a] in chord_set:
            mask |= 1 << i
    dual = m.partial_dual(mask)
    side = tuple("out" if mask >> i & 1 else "in" for i in range(len(dual.edges)))
    return from_map(dual, side)


def product(
    d1: ChordDiagram, d2: ChordDiagram, cut1: int = 0, cut2: int = 0
) -> ChordDiagram:
    """Connected sum: cut both circles open and glue them into one.

    ``cut`` positions index the gaps between consecutive endpoints,
    0..2n (gap 2n coincides with gap 0).
    """
    for cut, d in ((cut1, d1), (cut2, d2)):
        if not 0 <= cut <= len(d.word):
            raise CutOutOfRangeError(f"cut {cut} outside gaps 0..{len(d.word)}")
    cut1 %= max(len(d1.word), 1)
    cut2 %= max(len(d2.word), 1)
    offset = max(d1.word, default=0) + 1
    relabel: dict[int, int] = {}
    spliced = []
    for x in d2.word[cut2:] + d2.word[:cut2]:
        if x not in relabel:
            relabel[x] = offset + len(relabel)
        spliced.append(relabel[x])
    return ChordDiagram(d1.word[:cut1] + tuple(spliced) + d1.word[cut1:])


def caravan(k: int, g: int) -> ChordDiagram:
    """The product of k single chords and g interlaced pairs.

    Its surface has genus g and k+1 boundary components; by the
    classification of surfaces every diagram matches the caravan built
    from its own (boundary count - 1, genus).
    """
    if k < 0 or g < 0 or k + g < 1:
        raise EmptyCaravanError("a caravan needs k >= 0, g >= 0, k + g >= 1")
    word: list[int] = []
    label = 1
    for _ in range(k):
        word += [label, label]
        label += 1
    for _ in range(g):
        word += [label, label + 1, label, label + 1]
        label += 2
    return ChordDiagram(word)


def _matchings(points: tuple[int, ...]):
    """All perfect matchings of an even point set, as tuples of pairs."""
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for i, second in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        for tail in _matchings(remaining):
            yield ((first, second),) + tail


@lru_cache(maxsize=None)
def enumerate_diagrams(n: int) -> tuple[ChordDiagram, ...]:
    """All chord diagrams of order n, canonical and sorted.

    Enumerates the fixed-point-free involutions on 2n points and
    deduplicates by canonical form.  Desk scale is n <= 7.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        return (ChordDiagram(()),)
    words: set[tuple[int, ...]] = set()
    for matching in _matchings(tuple(range(2 * n))):
        word = [0] * (2 * n)
        for label, (a, b) in enumerate(matching, start=1):
            word[a] = word[b] = label
        words.add(_canonical_word(tuple(word)))
    return tuple(ChordDiagram(w) for w in sorted(words))
