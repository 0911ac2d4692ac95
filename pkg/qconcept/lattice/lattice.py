"""Finite complete lattices given extensionally by an order matrix.

Example:
    ```py
    >>> c3 = validate_lattice(
    ...     {"elements": ["0", "h", "1"], "leq": [[1, 1, 1], [0, 1, 1], [0, 0, 1]]}
    ... )
    >>> c3.join2("0", "h"), c3.meet(["h", "1"]), c3.join([])
    ('h', 'h', '0')

    ```
"""
import functools
import logging
from typing import Iterable, Iterator

import networkx as nx
import numpy as np

from qconcept.util.errors import (
    FibreTooLarge,
    NotALattice,
    NotAPartialOrder,
    ParseError,
)

logger = logging.getLogger(__name__)


class Lattice:
    """Interface shared by `FiniteLattice` and `ProductLattice`.

    Subclasses provide `leq`, `join2`, `meet2`, `top`, `bottom`, `sort_key`,
    `covers`, `__iter__` and `__len__`; arbitrary joins and meets are folds of the
    binary operations (empty join is `bottom`, empty meet is `top`).
    """

    top = None
    bottom = None

    def leq(self, a, b) -> bool:
        raise NotImplementedError

    def join2(self, a, b):
        raise NotImplementedError

    def meet2(self, a, b):
        raise NotImplementedError

    def sort_key(self, a):
        raise NotImplementedError

    def covers(self) -> list:
        raise NotImplementedError

    def __iter__(self) -> Iterator:
        raise NotImplementedError

    def __len__(self) -> int:
        raise NotImplementedError

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def join(self, subset: Iterable):
        return functools.reduce(self.join2, subset, self.bottom)

    def meet(self, subset: Iterable):
        return functools.reduce(self.meet2, subset, self.top)

    def sorted(self, items: Iterable) -> list:
        """Returns items in canonical element order."""
        return sorted(items, key=self.sort_key)

    def check_size(self, limit: int, what: str = "lattice") -> None:
        """Raises `FibreTooLarge` if the lattice has more than `limit` elements."""
        if len(self) > limit:
            raise FibreTooLarge(
                f"{what} has {len(self)} elements (limit {limit}); raise --limit"
            )


class FiniteLattice(Lattice):
    """A finite lattice with precomputed binary join and meet tables.

    Args:
        elements: Element names (canonical iteration order).
        leq: Square boolean matrix, ``leq[i][j]`` meaning
            ``elements[i] <= elements[j]``.
        name: Optional label used in messages and dumps.

    Raises:
        ParseError: Empty or duplicate elements, or a malformed matrix.
        NotAPartialOrder: Reflexivity, antisymmetry or transitivity fails.
        NotALattice: Some pair lacks a join or a meet.
    """

    def __init__(self, elements: Iterable[str], leq, name: str = ""):
        self.elements = tuple(str(x) for x in elements)
        self.name = name
        if not self.elements:
            raise ParseError(f"lattice {name} has no elements")
        if len(set(self.elements)) != len(self.elements):
            raise ParseError(f"lattice {name} has duplicate elements {self.elements}")
        self.index = {x: i for i, x in enumerate(self.elements)}
        try:
            order = np.array(leq, dtype=bool)
        except (TypeError, ValueError):
            raise ParseError(f"lattice {name}: leq is not a boolean matrix")
        n = len(self.elements)
        if order.shape != (n, n):
            raise ParseError(f"lattice {name}: leq shape {order.shape} != ({n}, {n})")
        self.order = order
        self.order.setflags(write=False)
        self._check_partial_order()
        self.join_table = self._bound_table(upper=True)
        self.meet_table = self._bound_table(upper=False)
        self.top = self.elements[int(np.flatnonzero(self.order.all(axis=0))[0])]
        self.bottom = self.elements[int(np.flatnonzero(self.order.all(axis=1))[0])]

    def _check_partial_order(self) -> None:
        order = self.order
        diag = np.flatnonzero(~order.diagonal())
        if diag.size:
            x = self.elements[diag[0]]
            raise NotAPartialOrder("leq is not reflexive", (x, x))
        both = order & order.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = np.argwhere(both)[0]
            raise NotAPartialOrder(
                "leq is not antisymmetric", (self.elements[i], self.elements[j])
            )
        square = (order.astype(int) @ order.astype(int)) > 0
        broken = square & ~order
        if broken.any():
            i, k = np.argwhere(broken)[0]
            j = int(np.flatnonzero(order[i] & order[:, k])[0])
            raise NotAPartialOrder(
                "leq is not transitive",
                (self.elements[i], self.elements[j], self.elements[k]),
            )

    def _bound_table(self, upper: bool) -> np.ndarray:
        n = len(self.elements)
        order = self.order if upper else self.order.T
        table = np.zeros((n, n), dtype=int)
        for i in range(n):
            for j in range(i, n):
                bounds = np.flatnonzero(order[i] & order[j])
                least = [k for k in bounds if order[k, bounds].all()]
                if not least:
                    kind = "join" if upper else "meet"
                    raise NotALattice(
                        f"no {kind} in lattice {self.name}",
                        (self.elements[i], self.elements[j]),
                    )
                table[i, j] = table[j, i] = least[0]
        table.setflags(write=False)
        return table

    def leq(self, a: str, b: str) -> bool:
        return bool(self.order[self.index[a], self.index[b]])

    def join2(self, a: str, b: str) -> str:
        return self.elements[self.join_table[self.index[a], self.index[b]]]

    def meet2(self, a: str, b: str) -> str:
        return self.elements[self.meet_table[self.index[a], self.index[b]]]

    def sort_key(self, a: str) -> int:
        return self.index[a]

    def check_element(self, a: str, where: str = "") -> str:
        """Returns `a` if it names an element, otherwise raises `ParseError`."""
        if a not in self.index:
            raise ParseError(
                f"unknown element {a!r} of lattice {self.name} {where}".strip()
            )
        return a

    @functools.cached_property
    def hasse(self) -> nx.DiGraph:
        """The covering relation (transitive reduction) as a directed graph."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        n = len(self.elements)
        graph.add_edges_from(
            (self.elements[i], self.elements[j])
            for i in range(n)
            for j in range(n)
            if i != j and self.order[i, j]
        )
        return nx.transitive_reduction(graph)

    @functools.cached_property
    def _covers(self) -> tuple:
        return tuple(
            sorted(self.hasse.edges, key=lambda e: (self.index[e[0]], self.index[e[1]]))
        )

    def covers(self) -> list:
        return list(self._covers)

    def dual(self, name: str = "") -> "FiniteLattice":
        """The same elements with the reversed order."""
        return FiniteLattice(self.elements, self.order.T, name or f"{self.name}^op")

    def is_chain(self) -> bool:
        return bool((self.order | self.order.T).all())

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return a in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(
            self.order, other.order
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.order.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteLattice({self.name or ''} {list(self.elements)})"


def validate_lattice(candidate: dict | FiniteLattice, name: str = "") -> FiniteLattice:
    """Validates raw order data and returns a `FiniteLattice`.

    Args:
        candidate: ``{"elements": [str], "leq": [[bool]]}`` (or a lattice, returned
            as-is).
        name: Label used in error messages.
    """
    if isinstance(candidate, FiniteLattice):
        return candidate
    if not isinstance(candidate, dict):
        raise ParseError(f"lattice {name} must be an object with elements and leq")
    missing = [k for k in ("elements", "leq") if k not in candidate]
    if missing:
        raise ParseError(f"lattice {name} missing keys {missing}")
    lattice = FiniteLattice(candidate["elements"], candidate["leq"], name=name)
    logger.debug(f"{name} - {len(lattice)} elements")
    return lattice


def join(lattice: Lattice, subset: Iterable):
    """Least upper bound of `subset` (bottom when empty)."""
    return lattice.join(subset)


def meet(lattice: Lattice, subset: Iterable):
    """Greatest lower bound of `subset` (top when empty)."""
    return lattice.meet(subset)


def lattice_to_json(lattice: FiniteLattice) -> dict:
    """Returns the JSON form ``{"elements", "leq"}`` of a lattice."""
    return {
        "elements": list(lattice.elements),
        "leq": lattice.order.astype(bool).tolist(),
    }
