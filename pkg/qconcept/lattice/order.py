"""Monotone maps, Galois connections, closure operators and their fixed points."""
import functools
import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from qconcept.lattice.lattice import Lattice
from qconcept.util.errors import GaloisFailure, NotAClosure, NotMonotone, ShapeMismatch

logger = logging.getLogger(__name__)

PAIR_LIMIT = 1_000_000


class MonotoneMap:
    """A map between lattices, evaluated on demand and tabulated lazily.

    Args:
        source: Domain lattice.
        target: Codomain lattice.
        func: Picklable callable computing the image of one element.
        name: Label used in logs and error messages.
    """

    def __init__(self, source: Lattice, target: Lattice, func: Callable, name=""):
        self.source = source
        self.target = target
        self.func = func
        self.name = name

    def __call__(self, a):
        return self.func(a)

    @functools.cached_property
    def table(self) -> dict:
        """Images of every source element, in canonical order."""
        return {a: self.func(a) for a in self.source}

    def monotone_witness(self) -> tuple | None:
        """Returns a cover ``(a, a')`` with ``f(a) ≰ f(a')``, or ``None``.

        Notes:
            Checking covering pairs suffices in a finite lattice.
        """
        for low, high in self.source.covers():
            if not self.target.leq(self.table[low], self.table[high]):
                return (low, high)
        return None

    def is_monotone(self) -> bool:
        return self.monotone_witness() is None

    def check_monotone(self) -> "MonotoneMap":
        witness = self.monotone_witness()
        if witness is not None:
            raise NotMonotone(f"{self.name} is not monotone", witness)
        return self

    def __repr__(self) -> str:
        return f"MonotoneMap({self.name}: {self.source} -> {self.target})"


class _Composite:
    """``outer ∘ inner`` as a picklable callable."""

    def __init__(self, outer: Callable, inner: Callable):
        self.outer = outer
        self.inner = inner

    def __call__(self, a):
        return self.outer(self.inner(a))


def compose(outer: MonotoneMap, inner: MonotoneMap, name: str = "") -> MonotoneMap:
    """Returns ``outer ∘ inner``."""
    if inner.target != outer.source:
        raise ShapeMismatch(f"cannot compose {outer.name} after {inner.name}")
    name = name or f"{outer.name}{inner.name}"
    return MonotoneMap(inner.source, outer.target, _Composite(outer, inner), name)


def is_galois(
    left: MonotoneMap, right: MonotoneMap, pair_limit: int = PAIR_LIMIT
) -> bool:
    """Returns whether ``left(a) ≤ b ⟺ a ≤ right(b)`` for all ``a``, ``b``.

    Args:
        left: Map ``A -> B``.
        right: Map ``B -> A``.
        pair_limit: Largest ``|A|·|B|`` checked pair by pair. Above it the equivalent
            criterion (both maps monotone, ``a ≤ right(left(a))`` and
            ``left(right(b)) ≤ b``) is checked instead.

    Raises:
        ShapeMismatch: If the sources and targets don't line up.
    """
    A, B = left.source, left.target
    if right.source != B or right.target != A:
        raise ShapeMismatch(f"{left.name} and {right.name} are not opposite maps")
    if len(A) * len(B) <= pair_limit:
        f, g = left.table, right.table
        return all(B.leq(f[a], b) == A.leq(a, g[b]) for a in A for b in B)
    logger.warning(f"{len(A)}x{len(B)} pairs - checking unit/counit instead")
    if not (left.is_monotone() and right.is_monotone()):
        return False
    f, g = left.table, right.table
    return all(A.leq(a, g[f[a]]) for a in A) and all(B.leq(f[g[b]], b) for b in B)


@dataclass
class GaloisPair:
    """A Galois connection ``left ⊣ right`` between two lattices."""

    left: MonotoneMap
    right: MonotoneMap

    def validate(self, pair_limit: int = PAIR_LIMIT) -> "GaloisPair":
        if not is_galois(self.left, self.right, pair_limit):
            raise GaloisFailure(f"{self.left.name} ⊣ {self.right.name} fails")
        return self

    def closure(self) -> "ClosureOperator":
        """The closure ``right ∘ left`` on the source of ``left``."""
        return ClosureOperator(self.left.source, compose(self.right, self.left))

    def kernel(self) -> MonotoneMap:
        """The kernel ``left ∘ right`` on the source of ``right``."""
        return compose(self.left, self.right)


@dataclass
class ClosureOperator:
    """An inflationary, idempotent, monotone map of a lattice to itself."""

    carrier: Lattice
    map: MonotoneMap

    def __call__(self, a):
        return self.map(a)

    def witness(self) -> tuple | None:
        """Returns ``(law, element)`` for the first failing closure law, or ``None``."""
        table = self.map.table
        for a in self.carrier:
            if not self.carrier.leq(a, table[a]):
                return ("inflationary", a)
            if table[table[a]] != table[a]:
                return ("idempotent", a)
        cover = self.map.monotone_witness()
        if cover is not None:
            return ("monotone", cover)
        return None

    def validate(self) -> "ClosureOperator":
        witness = self.witness()
        if witness is not None:
            raise NotAClosure(f"{self.map.name} is not {witness[0]}", witness[1:])
        return self


@dataclass
class FixedPointSet:
    """Fixed points of a closure, ordered as in the carrier.

    Attributes:
        carrier: The lattice carrying the closure.
        points: Fixed points in canonical carrier order.
        provenance: Which construction produced them (e.g. ``isbell@0``).
    """

    carrier: Lattice
    points: tuple
    provenance: str = ""
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.points = tuple(self.carrier.sorted(set(self.points)))
        self._members = frozenset(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, a) -> bool:
        return a in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, FixedPointSet):
            return NotImplemented
        return self.carrier == other.carrier and self._members == other._members

    def meet_witness(self) -> tuple | None:
        """A pair whose carrier meet is missing (or ``("top",)``), else ``None``."""
        if self.carrier.top not in self._members:
            return ("top",)
        for i, a in enumerate(self.points):
            for b in self.points[i + 1 :]:
                if self.carrier.meet2(a, b) not in self._members:
                    return (a, b)
        return None

    def is_meet_closed(self) -> bool:
        return self.meet_witness() is None

    def order_matrix(self) -> np.ndarray:
        """Inherited order, ``m[i, j]`` meaning ``points[i] ≤ points[j]``."""
        return np.array(
            [[self.carrier.leq(a, b) for b in self.points] for a in self.points],
            dtype=bool,
        ).reshape(len(self.points), len(self.points))


def fixed_points(c: ClosureOperator, validate: bool = True) -> FixedPointSet:
    """Returns ``{a | c(a) = a}`` with the order inherited from the carrier.

    Raises:
        NotAClosure: If `c` fails a closure law (``validate=True``).
    """
    if validate:
        c.validate()
    points = [a for a in c.carrier if c(a) == a]
    logger.debug(f"{c.map.name} - {len(points)} of {len(c.carrier)} fixed")
    return FixedPointSet(c.carrier, tuple(points), c.map.name)
