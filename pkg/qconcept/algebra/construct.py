"""Quantaloids built from adjoint triples and multi-adjoint frames.

All four constructions share one shape: a few declared off-diagonal homs, a
designated object triple per adjoint triple where ``v ∘ u = u ⊗ v``, diagonal
homs ``{bot, id}`` and one-element homs everywhere else. Every remaining
composition is the one forced by the laws:

- ``v ∘ id = v`` and ``id ∘ u = u``;
- anything else is the bottom of the target hom (a bottom argument, or a
  composite through a one-element hom).

Objects are strings: ``"-1"``, ``"0"``, ``"1"`` .. ``"n"`` and ``"inf"``.
"""
import itertools
import logging

from qconcept.algebra.quantaloid import FiniteQuantaloid, composition_table
from qconcept.algebra.triple import AdjointTriple
from qconcept.lattice.examples import chain
from qconcept.util.errors import FrameMismatch

logger = logging.getLogger(__name__)

BOT = "bot"
ID = "id"
INF = "inf"
DIAGONAL = chain([BOT, ID], "{bot,id}")
TRIVIAL = chain([BOT], "{bot}")


class _ForcedComposition:
    def __init__(self, p: str, q: str, r: str, target_bottom: str):
        self.p, self.q, self.r = p, q, r
        self.target_bottom = target_bottom

    def __call__(self, v: str, u: str) -> str:
        if self.p == self.q and u == ID:
            return v
        if self.q == self.r and v == ID:
            return u
        return self.target_bottom


class _Designated:
    """``v ∘ u = u ⊗ v`` on a designated object triple."""

    def __init__(self, triple: AdjointTriple):
        self.triple = triple

    def __call__(self, v: str, u: str) -> str:
        return self.triple.conj(u, v)


def forced_quantaloid(
    objects: list, declared: dict, designated: dict, name: str = ""
) -> FiniteQuantaloid:
    """Completes declared homs and designated compositions to a quantaloid.

    Args:
        objects: Object identifiers in canonical order.
        declared: ``{(p, q): FiniteLattice}`` for the non-trivial off-diagonal homs.
        designated: ``{(p, q, r): AdjointTriple}`` with ``hom(p, q)`` the triple's
            left lattice, ``hom(q, r)`` its right lattice and ``hom(p, r)`` its
            value lattice.
        name: Label used in logs.
    """
    homs = {}
    for p, q in itertools.product(objects, repeat=2):
        if p == q:
            homs[p, q] = DIAGONAL
        else:
            homs[p, q] = declared.get((p, q), TRIVIAL)
    tables = {}
    for p, q, r in itertools.product(objects, repeat=3):
        if (p, q, r) in designated:
            func = _Designated(designated[p, q, r])
        else:
            func = _ForcedComposition(p, q, r, homs[p, r].bottom)
        tables[p, q, r] = composition_table(homs[p, q], homs[q, r], homs[p, r], func)
    Q = FiniteQuantaloid(objects, homs, tables, {p: ID for p in objects}, name)
    logger.debug(f"{name} - objects {list(objects)}")
    return Q


def check_frame(triples: list) -> tuple:
    """Returns the lattices ``(left, right, value)`` shared by all `triples`.

    Raises:
        FrameMismatch: If there are no triples or they disagree on a lattice.
    """
    if not triples:
        raise FrameMismatch("a frame needs at least one adjoint triple")
    lattices = triples[0].lattices()
    for i, t in enumerate(triples[1:], start=2):
        roles = ("left", "right", "value")
        for role, mine, first in zip(roles, t.lattices(), lattices):
            if mine != first:
                raise FrameMismatch(
                    f"triple {i} disagrees with triple 1 on its {role} lattice",
                    (i, role),
                )
    return lattices


def build_Qw(t: AdjointTriple) -> FiniteQuantaloid:
    """Q_⊗: objects ``-1, 0, 1`` with ``hom(-1, 0) = L1``, ``hom(0, 1) = L2``,
    ``hom(-1, 1) = P`` for a triple on ``(L1, L2, P)``."""
    L1, L2, P = t.lattices()
    declared = {("-1", "0"): L1, ("0", "1"): L2, ("-1", "1"): P}
    return forced_quantaloid(
        ["-1", "0", "1"], declared, {("-1", "0", "1"): t}, f"Q_⊗({t.name})"
    )


def build_QF(triples: list) -> FiniteQuantaloid:
    """Q_F(L) of a formal frame: triples on ``(L1, L2, P)``.

    Objects ``-1, 0, 1..n``; ``hom(-1, 0) = L1``, ``hom(0, i) = L2`` and
    ``hom(-1, i) = P``, with ``v ∘ u = u ⊗_i v`` on ``(-1, 0, i)``.
    """
    L1, L2, P = check_frame(triples)
    indices = [str(i) for i in range(1, len(triples) + 1)]
    declared = {("-1", "0"): L1}
    designated = {}
    for i, t in zip(indices, triples):
        declared["0", i] = L2
        declared["-1", i] = P
        designated["-1", "0", i] = t
    return forced_quantaloid(["-1", "0"] + indices, declared, designated, "Q_F")


def build_QP(triples: list) -> FiniteQuantaloid:
    """Q_P(L) of a property-oriented frame: triples on ``(P, L2, L1)``.

    Objects ``0, 1..n, inf``; ``hom(0, i) = P``, ``hom(i, inf) = L2`` and
    ``hom(0, inf) = L1``, with ``v ∘ u = u ⊗_i v`` on ``(0, i, inf)``.
    """
    P, L2, L1 = check_frame(triples)
    indices = [str(i) for i in range(1, len(triples) + 1)]
    declared = {("0", INF): L1}
    designated = {}
    for i, t in zip(indices, triples):
        declared["0", i] = P
        declared[i, INF] = L2
        designated["0", i, INF] = t
    return forced_quantaloid(["0"] + indices + [INF], declared, designated, "Q_P")


def build_QO(triples: list) -> FiniteQuantaloid:
    """Q_O(L) of an object-oriented frame: triples on ``(L1, P, L2)``.

    Objects ``-1, 0, 1..n``; ``hom(-1, 0) = L1``, ``hom(0, i) = P`` and
    ``hom(-1, i) = L2``, with ``v ∘ u = u ⊗_i v`` on ``(-1, 0, i)``.
    """
    L1, P, L2 = check_frame(triples)
    indices = [str(i) for i in range(1, len(triples) + 1)]
    declared = {("-1", "0"): L1}
    designated = {}
    for i, t in zip(indices, triples):
        declared["0", i] = P
        declared["-1", i] = L2
        designated["-1", "0", i] = t
    return forced_quantaloid(["-1", "0"] + indices, declared, designated, "Q_O")
