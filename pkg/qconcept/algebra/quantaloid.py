"""Finite quantaloids: hom-lattices, typed composition tables and implications.

Composition tables are numpy integer arrays. For composable objects ``p, q, r`` the
table ``tables[p, q, r]`` is indexed ``[v, u]`` by positions of ``v ∈ hom(q, r)``
and ``u ∈ hom(p, q)`` and holds the position of ``v ∘ u`` in ``hom(p, r)``.
The implications

    v ∘ u ≤ w  ⟺  v ≤ w ↙ u  ⟺  u ≤ v ↘ w

are the joins of all candidates and are tabulated lazily per object triple.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from qconcept.lattice.lattice import FiniteLattice, lattice_to_json, validate_lattice
from qconcept.util.errors import (
    IdentityFailure,
    NotAssociative,
    NotJoinPreserving,
    ParseError,
    TypeMismatch,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QArrow:
    """An arrow ``value : source -> target`` of a quantaloid."""

    source: str
    target: str
    value: str


class FiniteQuantaloid:
    """A quantaloid with finitely many objects and finite hom-lattices.

    Construction only checks that the data is complete and well-typed; the laws
    are checked by `validate_quantaloid`.

    Args:
        objects: Object identifiers, in canonical order.
        homs: ``{(p, q): FiniteLattice}`` for every ordered pair of objects.
        tables: ``{(p, q, r): array}`` for every composable triple, see module doc.
        identities: ``{q: element of hom(q, q)}``.
        name: Label used in logs and dumps.
    """

    def __init__(
        self,
        objects,
        homs: dict,
        tables: dict,
        identities: dict,
        name: str = "",
    ):
        self.objects = tuple(str(p) for p in objects)
        self.homs = dict(homs)
        self.identities = dict(identities)
        self.name = name
        self.tables = {}
        for key in itertools.product(self.objects, repeat=3):
            if key not in tables:
                raise ParseError(f"quantaloid {name}: no composition for {key}")
            table = np.asarray(tables[key], dtype=int)
            table.setflags(write=False)
            self.tables[key] = table
        self._check_shapes()
        self._ldd = {}
        self._rdd = {}

    def _check_shapes(self) -> None:
        for p, q in itertools.product(self.objects, repeat=2):
            if (p, q) not in self.homs:
                raise ParseError(f"quantaloid {self.name}: no hom({p}, {q})")
        for q in self.objects:
            if q not in self.identities or self.identities[q] not in self.homs[q, q]:
                raise ParseError(f"quantaloid {self.name}: bad identity of {q}")
        for (p, q, r), table in self.tables.items():
            shape = (len(self.homs[q, r]), len(self.homs[p, q]))
            if table.shape != shape:
                raise ParseError(
                    f"quantaloid {self.name}: table {(p, q, r)} has shape "
                    f"{table.shape}, expected {shape}"
                )
            if table.size and (table.min() < 0 or table.max() >= len(self.homs[p, r])):
                raise ParseError(
                    f"quantaloid {self.name}: table {(p, q, r)} leaves hom({p}, {r})"
                )

    def hom(self, p: str, q: str) -> FiniteLattice:
        return self.homs[p, q]

    def identity(self, q: str) -> str:
        return self.identities[q]

    def bottom(self, p: str, q: str) -> str:
        return self.homs[p, q].bottom

    def top(self, p: str, q: str) -> str:
        return self.homs[p, q].top

    def arrow(self, p: str, q: str, value: str) -> QArrow:
        """Returns a typed arrow, checking that `value` lies in ``hom(p, q)``."""
        if (p, q) not in self.homs or value not in self.homs[p, q]:
            raise TypeMismatch(f"{value!r} is not an arrow {p} -> {q}", (p, q, value))
        return QArrow(p, q, value)

    def compose(self, p: str, q: str, r: str, v: str, u: str) -> str:
        """``v ∘ u`` for ``u ∈ hom(p, q)`` and ``v ∈ hom(q, r)``."""
        table = self.tables[p, q, r]
        i = table[self.homs[q, r].index[v], self.homs[p, q].index[u]]
        return self.homs[p, r].elements[i]

    def ldd(self, p: str, q: str, r: str, w: str, u: str) -> str:
        """``w ↙ u ∈ hom(q, r)``: the greatest ``v`` with ``v ∘ u ≤ w``."""
        if (p, q, r) not in self._ldd:
            self._ldd[p, q, r] = self._residual_table(p, q, r, left=True)
        i = self._ldd[p, q, r][self.homs[p, r].index[w], self.homs[p, q].index[u]]
        return self.homs[q, r].elements[i]

    def rdd(self, p: str, q: str, r: str, v: str, w: str) -> str:
        """``v ↘ w ∈ hom(p, q)``: the greatest ``u`` with ``v ∘ u ≤ w``."""
        if (p, q, r) not in self._rdd:
            self._rdd[p, q, r] = self._residual_table(p, q, r, left=False)
        i = self._rdd[p, q, r][self.homs[q, r].index[v], self.homs[p, r].index[w]]
        return self.homs[p, q].elements[i]

    def _residual_table(self, p: str, q: str, r: str, left: bool) -> np.ndarray:
        below = self.homs[p, r].order[self.tables[p, q, r]]
        if left:
            hom, candidates = self.homs[q, r], below.transpose(2, 1, 0)
        else:
            hom, candidates = self.homs[p, q], below.transpose(0, 2, 1)
        out = np.empty(candidates.shape[:2], dtype=int)
        for i, j in np.ndindex(*out.shape):
            best = hom.join(hom.elements[k] for k in np.flatnonzero(candidates[i, j]))
            out[i, j] = hom.index[best]
        out.setflags(write=False)
        return out

    def table_names(self, p: str, q: str, r: str) -> list:
        """The composition of ``(p, q, r)`` as nested element names, rows ``v``."""
        names = self.homs[p, r].elements
        return [[names[i] for i in row] for row in self.tables[p, q, r].tolist()]

    def __repr__(self) -> str:
        return f"FiniteQuantaloid({self.name} {list(self.objects)})"


def composition_table(
    source: FiniteLattice, middle: FiniteLattice, target: FiniteLattice, func: Callable
) -> np.ndarray:
    """Tabulates ``func(v, u)`` for ``u ∈ source``, ``v ∈ middle`` as target positions.

    Args:
        source: ``hom(p, q)``.
        middle: ``hom(q, r)``.
        target: ``hom(p, r)``.
        func: Returns the element name of ``v ∘ u``.
    """
    return np.array(
        [[target.index[func(v, u)] for u in source] for v in middle], dtype=int
    ).reshape(len(middle), len(source))


def ldd(Q: FiniteQuantaloid, w: QArrow, u: QArrow) -> QArrow:
    """The left implication ``w ↙ u : q -> r`` of ``w : p -> r`` and ``u : p -> q``.

    Raises:
        TypeMismatch: If `w` and `u` do not share their source.
    """
    if w.source != u.source:
        raise TypeMismatch("w ↙ u needs arrows with a common source", (w, u))
    p, q, r = u.source, u.target, w.target
    return QArrow(q, r, Q.ldd(p, q, r, w.value, u.value))


def rdd(Q: FiniteQuantaloid, v: QArrow, w: QArrow) -> QArrow:
    """The right implication ``v ↘ w : p -> q`` of ``v : q -> r`` and ``w : p -> r``.

    Raises:
        TypeMismatch: If `v` and `w` do not share their target.
    """
    if v.target != w.target:
        raise TypeMismatch("v ↘ w needs arrows with a common target", (v, w))
    p, q, r = w.source, v.source, v.target
    return QArrow(p, q, Q.rdd(p, q, r, v.value, w.value))


def identity_witness(Q: FiniteQuantaloid) -> tuple | None:
    """Returns ``(p, q, u, side)`` where an identity fails to act as a unit."""
    for p, q in itertools.product(Q.objects, repeat=2):
        hom = Q.homs[p, q]
        positions = np.arange(len(hom))
        after = Q.tables[p, q, q][Q.homs[q, q].index[Q.identities[q]], :]
        before = Q.tables[p, p, q][:, Q.homs[p, p].index[Q.identities[p]]]
        for side, row in (("left", after), ("right", before)):
            bad = np.flatnonzero(row != positions)
            if bad.size:
                return (p, q, hom.elements[bad[0]], side)
    return None


def join_witness(Q: FiniteQuantaloid) -> tuple | None:
    """Returns a witness ``(p, q, r, argument, ...)`` of a join not preserved."""
    for p, q, r in itertools.product(Q.objects, repeat=3):
        T = Q.tables[p, q, r]
        U, V, W = Q.homs[p, q], Q.homs[q, r], Q.homs[p, r]
        bot = W.index[W.bottom]
        bad = np.flatnonzero(T[V.index[V.bottom], :] != bot)
        if bad.size:
            return (p, q, r, "empty join, first argument", V.bottom, U.elements[bad[0]])
        bad = np.flatnonzero(T[:, U.index[U.bottom]] != bot)
        if bad.size:
            where = "empty join, second argument"
            return (p, q, r, where, V.elements[bad[0]], U.bottom)
        first = T[V.join_table] != W.join_table[T[:, None, :], T[None, :, :]]
        if first.any():
            i, j, k = np.argwhere(first)[0]
            at = (V.elements[i], V.elements[j], U.elements[k])
            return (p, q, r, "first argument", *at)
        second = T[:, U.join_table] != W.join_table[T[:, :, None], T[:, None, :]]
        if second.any():
            k, i, j = np.argwhere(second)[0]
            at = (V.elements[k], U.elements[i], U.elements[j])
            return (p, q, r, "second argument", *at)
    return None


def associativity_witness(Q: FiniteQuantaloid) -> tuple | None:
    """Returns ``(p, q, r, s, w, v, u)`` with ``w ∘ (v ∘ u) != (w ∘ v) ∘ u``."""
    for p, q, r, s in itertools.product(Q.objects, repeat=4):
        inner_first = Q.tables[p, r, s][:, Q.tables[p, q, r]]
        outer_first = Q.tables[p, q, s][Q.tables[q, r, s]]
        bad = np.argwhere(inner_first != outer_first)
        if bad.size:
            k, j, i = bad[0]
            w = Q.homs[r, s].elements[k]
            v = Q.homs[q, r].elements[j]
            u = Q.homs[p, q].elements[i]
            return (p, q, r, s, w, v, u)
    return None


def residuation_witness(Q: FiniteQuantaloid) -> tuple | None:
    """Returns ``(p, q, r, v, u, w)`` breaking ``v∘u ≤ w ⟺ v ≤ w↙u ⟺ u ≤ v↘w``."""
    for p, q, r in itertools.product(Q.objects, repeat=3):
        U, V, W = Q.homs[p, q], Q.homs[q, r], Q.homs[p, r]
        for v, u, w in itertools.product(V, U, W):
            a = W.leq(Q.compose(p, q, r, v, u), w)
            b = V.leq(v, Q.ldd(p, q, r, w, u))
            c = U.leq(u, Q.rdd(p, q, r, v, w))
            if not a == b == c:
                return (p, q, r, v, u, w)
    return None


def validate_quantaloid(candidate: dict | FiniteQuantaloid) -> FiniteQuantaloid:
    """Checks the quantaloid laws exhaustively and returns the quantaloid.

    Identities are checked first, then join preservation (including empty joins),
    then associativity.

    Args:
        candidate: A quantaloid, or its JSON form (see `quantaloid_to_json`).

    Raises:
        ParseError: If the JSON form is incomplete or ill-typed.
        IdentityFailure: An identity does not act as a two-sided unit.
        NotJoinPreserving: Composition fails to preserve a join.
        NotAssociative: Two bracketings of a composable triple disagree.
    """
    if isinstance(candidate, dict):
        candidate = quantaloid_from_json(candidate)
    Q = candidate
    witness = identity_witness(Q)
    if witness is not None:
        raise IdentityFailure(f"{Q.name}: identity is not a unit", witness)
    witness = join_witness(Q)
    if witness is not None:
        raise NotJoinPreserving(f"{Q.name}: composition loses a join", witness)
    witness = associativity_witness(Q)
    if witness is not None:
        raise NotAssociative(f"{Q.name}: composition is not associative", witness)
    logger.debug(f"{Q.name} - {len(Q.objects)} objects, laws hold")
    return Q


def is_nontrivial(Q: FiniteQuantaloid) -> bool:
    """Whether ``⊥_{q,q} < id_q`` for every object ``q``."""
    return all(Q.homs[q, q].lt(Q.bottom(q, q), Q.identities[q]) for q in Q.objects)


def build_quantale(
    lattice: FiniteLattice,
    multiply: Callable | list,
    unit: str,
    name: str = "",
    obj: str = "*",
) -> FiniteQuantaloid:
    """A one-object quantaloid (unital quantale) on `lattice`.

    Args:
        lattice: The single hom-lattice.
        multiply: ``multiply(v, u)`` naming ``v ∘ u``, or nested rows indexed by
            ``v`` then ``u``.
        unit: The identity element.
        name: Label used in logs.
        obj: Identifier of the single object.
    """
    if callable(multiply):
        func = multiply
    else:

        def func(v, u):
            return str(multiply[lattice.index[v]][lattice.index[u]])

    table = composition_table(lattice, lattice, lattice, func)
    return FiniteQuantaloid(
        [obj], {(obj, obj): lattice}, {(obj, obj, obj): table}, {obj: unit}, name
    )


def quantaloid_to_json(Q: FiniteQuantaloid) -> dict:
    """Dumps objects, homs, identities and composition tables (element names)."""
    return {
        "name": Q.name,
        "objects": list(Q.objects),
        "homs": {f"{p},{q}": lattice_to_json(Q.homs[p, q]) for p, q in Q.homs},
        "identities": dict(Q.identities),
        "composition": {
            f"{p},{q},{r}": Q.table_names(p, q, r) for p, q, r in Q.tables
        },
    }


def quantaloid_from_json(data: dict) -> FiniteQuantaloid:
    """Reads the form written by `quantaloid_to_json`, without checking laws."""
    keys = ("objects", "homs", "identities", "composition")
    missing = [k for k in keys if k not in data]
    if missing:
        raise ParseError(f"quantaloid missing keys {missing}")
    homs = {}
    for key, raw in data["homs"].items():
        p, q = key.split(",")
        homs[p, q] = validate_lattice(raw, f"hom({key})")
    tables = {}
    for key, rows in data["composition"].items():
        p, q, r = key.split(",")
        if not {(p, q), (q, r), (p, r)} <= homs.keys():
            raise ParseError(f"composition {key} refers to a missing hom")
        target = homs[p, r]
        try:
            tables[p, q, r] = [
                [target.index[str(w)] for w in row] for row in rows
            ]
        except KeyError as e:
            raise ParseError(f"composition {key}: unknown element {e.args[0]!r}")
    return FiniteQuantaloid(
        data["objects"], homs, tables, data["identities"], data.get("name", "")
    )


def is_forced(Q: FiniteQuantaloid, p: str, q: str, r: str, v: str, u: str) -> bool:
    """Whether the unit or empty-join laws alone determine ``v ∘ u``."""
    return (
        u == Q.bottom(p, q)
        or v == Q.bottom(q, r)
        or (p == q and u == Q.identities[p])
        or (q == r and v == Q.identities[q])
    )


def mutations(
    Q: FiniteQuantaloid, forced_only: bool = True
) -> Iterator[tuple[tuple, FiniteQuantaloid]]:
    """Yields every single-entry corruption of the composition tables.

    Each entry ``v ∘ u`` is replaced by the next element of ``hom(p, r)`` in
    canonical order. One-element targets admit no corruption and are skipped.

    Args:
        Q: The quantaloid to corrupt.
        forced_only: Only corrupt entries fixed by the unit and empty-join laws;
            these corruptions are always rejected by `validate_quantaloid`.

    Yields:
        ``((p, q, r, v, u, replacement), corrupted quantaloid)``.
    """
    for (p, q, r), table in Q.tables.items():
        target = Q.homs[p, r]
        if len(target) < 2:
            continue
        for (i, j), k in np.ndenumerate(table):
            v, u = Q.homs[q, r].elements[i], Q.homs[p, q].elements[j]
            if forced_only and not is_forced(Q, p, q, r, v, u):
                continue
            changed = table.copy()
            changed[i, j] = (k + 1) % len(target)
            tables = dict(Q.tables)
            tables[p, q, r] = changed
            mutant = FiniteQuantaloid(Q.objects, Q.homs, tables, Q.identities, Q.name)
            yield (p, q, r, v, u, target.elements[changed[i, j]]), mutant
