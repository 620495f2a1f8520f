"""Finite preference models and the semantic revision operators.

A preference model is a finite set of worlds carrying valuations, plus a
reflexive transitive relation ``leq`` read as "at least as preferred as"
(minimal worlds are the most plausible ones). On finite models the
well-foundedness of the strict part amounts to its acyclicity, which is what
gets validated here. The relation is stored as a dense boolean matrix so
pairwise queries during postulate sweeps are O(1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ModelInvariantError
from .formula import Formula, Signature, Valuation, eval_formula


@dataclass(frozen=True)
class World:
    """A possible world: an opaque id plus a valuation. Distinct worlds may
    share a valuation."""

    id: str
    valuation: Valuation


def worlds_for_signature(sig: Signature) -> tuple[World, ...]:
    """One world per valuation, in canonical valuation order.

    Ids name the atoms true at the world (``w_pq``, ``w_p``, ``w_0``, ...).
    Falls back to positional ids if atom names would collide when joined.
    """
    valuations = list(sig.valuations())
    ids = []
    for v in valuations:
        true = v.true_atoms()
        ids.append("w_" + ("".join(true) if true else "0"))
    if len(set(ids)) != len(ids):
        ids = [f"w{i}" for i in range(len(valuations))]
    return tuple(World(i, v) for i, v in zip(ids, valuations))


def reflexive_transitive_closure(matrix: np.ndarray) -> np.ndarray:
    """Smallest reflexive transitive relation containing ``matrix``."""
    n = matrix.shape[0]
    closed = matrix | np.eye(n, dtype=bool)
    while True:
        step = closed | ((closed.astype(np.uint8) @ closed.astype(np.uint8)) > 0)
        if np.array_equal(step, closed):
            return closed
        closed = step


def transitive_closure(matrix: np.ndarray) -> np.ndarray:
    closed = matrix.copy()
    while True:
        step = closed | ((closed.astype(np.uint8) @ closed.astype(np.uint8)) > 0)
        if np.array_equal(step, closed):
            return closed
        closed = step


class PreferenceModel:
    """Worlds plus a reflexive transitive ``leq`` with acyclic strict part.

    Immutable once constructed; the relation matrix rows and columns follow
    the order in which worlds were supplied.
    """

    def __init__(self, worlds: Sequence[World], matrix: np.ndarray):
        worlds = tuple(worlds)
        if not worlds:
            raise ModelInvariantError("a model needs at least one world")
        ids = [w.id for w in worlds]
        if len(set(ids)) != len(ids):
            dup = next(i for i in ids if ids.count(i) > 1)
            raise ModelInvariantError(f"duplicate world id {dup!r}")
        signatures = {w.valuation.signature for w in worlds}
        if len(signatures) != 1:
            raise ModelInvariantError("worlds mix different signatures")

        mat = np.array(matrix, dtype=bool)
        n = len(worlds)
        if mat.shape != (n, n):
            raise ModelInvariantError(
                f"relation shape {mat.shape} does not match {n} worlds"
            )
        if not mat.diagonal().all():
            bad = ids[int(np.argmin(mat.diagonal()))]
            raise ModelInvariantError(f"relation is not reflexive at {bad!r}")
        implied = (mat.astype(np.uint8) @ mat.astype(np.uint8)) > 0
        missing = implied & ~mat
        if missing.any():
            a, b = (int(x) for x in np.argwhere(missing)[0])
            raise ModelInvariantError(
                f"relation is not transitive: {ids[a]!r} <= {ids[b]!r} is implied but absent"
            )
        strict = mat & ~mat.T
        if transitive_closure(strict).diagonal().any():
            raise ModelInvariantError("strict part of the relation has a cycle")

        mat.setflags(write=False)
        self._worlds = worlds
        self._matrix = mat
        self._index = {w.id: i for i, w in enumerate(worlds)}

    # --- constructors ---------------------------------------------------

    @classmethod
    def from_pairs(
        cls, worlds: Sequence[World], pairs: Iterable[tuple[str, str]]
    ) -> "PreferenceModel":
        """Build from the exact relation given as id pairs. The diagonal is
        added automatically; transitivity must already hold."""
        worlds = tuple(worlds)
        index = {w.id: i for i, w in enumerate(worlds)}
        mat = np.eye(len(worlds), dtype=bool)
        for a, b in pairs:
            mat[index[a], index[b]] = True
        return cls(worlds, mat)

    @classmethod
    def from_edges(
        cls, worlds: Sequence[World], edges: Iterable[tuple[str, str]]
    ) -> "PreferenceModel":
        """Build from generator edges, taking the reflexive transitive
        closure. Ties are expressed by edges in both directions."""
        worlds = tuple(worlds)
        index = {w.id: i for i, w in enumerate(worlds)}
        mat = np.zeros((len(worlds), len(worlds)), dtype=bool)
        for a, b in edges:
            mat[index[a], index[b]] = True
        return cls(worlds, reflexive_transitive_closure(mat))

    # --- accessors --------------------------------------------------------

    @property
    def worlds(self) -> tuple[World, ...]:
        return self._worlds

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(w.id for w in self._worlds)

    @property
    def signature(self) -> Signature:
        return self._worlds[0].valuation.signature

    def world(self, world_id: str) -> World:
        return self._worlds[self._index[world_id]]

    def index(self, world_id: str) -> int:
        return self._index[world_id]

    def leq(self, a: str, b: str) -> bool:
        """Is ``a`` at least as preferred as ``b``?"""
        return bool(self._matrix[self._index[a], self._index[b]])

    def strictly_below(self, a: str, b: str) -> bool:
        return self.leq(a, b) and not self.leq(b, a)

    def pairs(self) -> frozenset[tuple[str, str]]:
        ids = self.ids
        return frozenset(
            (ids[a], ids[b]) for a, b in zip(*np.nonzero(self._matrix))
        )

    def satisfying(self, formula: Formula) -> tuple[World, ...]:
        return tuple(
            w for w in self._worlds if eval_formula(formula, w.valuation)
        )

    def restricted_to(self, ids: Iterable[str]) -> "PreferenceModel":
        """Submodel over a subset of worlds, in this model's world order."""
        keep = [self._index[i] for i in ids]
        keep.sort()
        sub = self._matrix[np.ix_(keep, keep)]
        return PreferenceModel(tuple(self._worlds[i] for i in keep), sub)

    def tie_classes(self) -> list[list[str]]:
        """Partition of world ids into mutual-preference classes, ordered by
        preference (most preferred class first, id tiebreak inside)."""
        ids = list(self.ids)
        assigned: dict[str, int] = {}
        classes: list[list[str]] = []
        for a in ids:
            if a in assigned:
                continue
            group = [b for b in ids if self.leq(a, b) and self.leq(b, a)]
            for b in group:
                assigned[b] = len(classes)
            classes.append(sorted(group, key=ids.index))
        # Kahn layers over the class order, deterministically
        remaining = list(range(len(classes)))
        ordered: list[list[str]] = []
        while remaining:
            ready = [
                c
                for c in remaining
                if not any(
                    o != c and self.leq(classes[o][0], classes[c][0])
                    for o in remaining
                )
            ]
            ready.sort(key=lambda c: classes[c][0])
            for c in ready:
                ordered.append(classes[c])
                remaining.remove(c)
        return ordered

    def describe_order(self) -> str:
        """Readable one-line rendering, e.g. ``w_pq < w_p < {w_q ~ w_0}``."""
        parts = []
        for group in self.tie_classes():
            if len(group) == 1:
                parts.append(group[0])
            else:
                parts.append("{" + " ~ ".join(group) + "}")
        return " < ".join(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PreferenceModel):
            return NotImplemented
        if set(self.ids) != set(other.ids):
            return False
        if any(
            self.world(i).valuation != other.world(i).valuation for i in self.ids
        ):
            return False
        order = sorted(self.ids)
        return all(
            self.leq(a, b) == other.leq(a, b) for a in order for b in order
        )

    def __hash__(self):
        raise TypeError("preference models are not hashable")

    def __repr__(self) -> str:
        return f"PreferenceModel({self.describe_order()})"


@dataclass(frozen=True, eq=False)
class RevisionOutcome:
    """Result of applying a dynamic operator: a model over the same worlds
    and valuations as the input, tagged with the operator and formula."""

    model: PreferenceModel
    operator: str
    formula: Formula


def min_worlds(model: PreferenceModel, formula: Formula) -> frozenset[World]:
    """The most preferred worlds satisfying ``formula``; empty iff no world
    satisfies it."""
    sat = model.satisfying(formula)
    return frozenset(
        w
        for w in sat
        if not any(model.strictly_below(o.id, w.id) for o in sat)
    )


def _sat_vector(model: PreferenceModel, formula: Formula) -> np.ndarray:
    return np.array(
        [eval_formula(formula, w.valuation) for w in model.worlds], dtype=bool
    )


def lex_revise(model: PreferenceModel, formula: Formula) -> RevisionOutcome:
    """Lexicographic revision: all satisfying worlds become strictly more
    preferred than all others; order inside each block is untouched."""
    sat = _sat_vector(model, formula)
    same_block = (sat[:, None] & sat[None, :]) | (~sat[:, None] & ~sat[None, :])
    crossing = sat[:, None] & ~sat[None, :]
    revised = (model.matrix & same_block) | crossing
    return RevisionOutcome(
        PreferenceModel(model.worlds, revised), "lexicographic", formula
    )


def natural_revise(model: PreferenceModel, formula: Formula) -> RevisionOutcome:
    """Natural revision: only the most preferred satisfying worlds are
    promoted, becoming the globally most preferred; the rest keep their
    relative order."""
    minimal = min_worlds(model, formula)
    min_vec = np.array([w in minimal for w in model.worlds], dtype=bool)
    promoted = np.repeat(min_vec[:, None], len(model.worlds), axis=1)
    kept = model.matrix & ~min_vec[:, None] & ~min_vec[None, :]
    revised = promoted | kept
    return RevisionOutcome(
        PreferenceModel(model.worlds, revised), "natural", formula
    )


def null_change(model: PreferenceModel, formula: Formula) -> RevisionOutcome:
    """The change that changes nothing."""
    return RevisionOutcome(model, "null", formula)


def enumerate_preorders(n: int) -> Iterator[np.ndarray]:
    """All reflexive transitive relations on ``n`` elements, in a fixed
    order. There are 4 for n=2 and 29 for n=3; meant for small n only."""
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    for picks in itertools.product((False, True), repeat=len(cells)):
        mat = np.eye(n, dtype=bool)
        for (i, j), on in zip(cells, picks):
            if on:
                mat[i, j] = True
        implied = (mat.astype(np.uint8) @ mat.astype(np.uint8)) > 0
        if (implied & ~mat).any():
            continue
        yield mat
