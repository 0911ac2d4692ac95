"""Products of finite lattices, used for presheaf and copresheaf fibres."""
import itertools
import logging
import math
from typing import Iterator

import numpy as np

from qconcept.lattice.lattice import FiniteLattice, Lattice
from qconcept.util.convert import vector_name

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 65536


class ProductLattice(Lattice):
    """The product of finite lattices ordered pointwise, or reversed pointwise.

    Elements are tuples of component element names and are never tabulated, so
    joins and meets are computed coordinate by coordinate.

    Args:
        components: One lattice per coordinate.
        reverse: Use the reverse of the pointwise order (copresheaf fibres).
        labels: Coordinate names (defaults to ``0..k-1``).
        limit: Largest size `covers` and `materialize` will enumerate.
    """

    def __init__(
        self,
        components: tuple[FiniteLattice, ...],
        reverse: bool = False,
        labels: tuple | None = None,
        limit: int = DEFAULT_LIMIT,
    ):
        self.components = tuple(components)
        self.limit = limit
        self.reverse = reverse
        self.labels = tuple(labels) if labels is not None else tuple(
            str(i) for i in range(len(self.components))
        )
        low = tuple(c.bottom for c in self.components)
        high = tuple(c.top for c in self.components)
        self.top, self.bottom = (low, high) if reverse else (high, low)

    def pointwise_leq(self, a: tuple, b: tuple) -> bool:
        return all(c.leq(x, y) for c, x, y in zip(self.components, a, b))

    def leq(self, a: tuple, b: tuple) -> bool:
        if self.reverse:
            return self.pointwise_leq(b, a)
        return self.pointwise_leq(a, b)

    def pointwise_join(self, a: tuple, b: tuple) -> tuple:
        return tuple(c.join2(x, y) for c, x, y in zip(self.components, a, b))

    def pointwise_meet(self, a: tuple, b: tuple) -> tuple:
        return tuple(c.meet2(x, y) for c, x, y in zip(self.components, a, b))

    def join2(self, a: tuple, b: tuple) -> tuple:
        if self.reverse:
            return self.pointwise_meet(a, b)
        return self.pointwise_join(a, b)

    def meet2(self, a: tuple, b: tuple) -> tuple:
        if self.reverse:
            return self.pointwise_join(a, b)
        return self.pointwise_meet(a, b)

    def sort_key(self, a: tuple) -> tuple:
        return tuple(c.index[x] for c, x in zip(self.components, a))

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == len(self.components)
            and all(x in c for c, x in zip(self.components, a))
        )

    def covers(self) -> list:
        """Covering pairs ``(lower, upper)``: a single coordinate steps up a cover."""
        self.check_size(self.limit, "product covers")
        pairs = []
        for vector in self:
            for i, component in enumerate(self.components):
                for low, high in component.covers():
                    if vector[i] == low:
                        upper = vector[:i] + (high,) + vector[i + 1 :]
                        pair = (upper, vector) if self.reverse else (vector, upper)
                        pairs.append(pair)
        return pairs

    def materialize(self, name: str = "") -> FiniteLattice:
        """Returns an equivalent `FiniteLattice` with vector names as elements."""
        self.check_size(self.limit, "materialized product")
        vectors = list(self)
        order = np.array([[self.leq(a, b) for b in vectors] for a in vectors])
        return FiniteLattice(
            [vector_name(v) for v in vectors], order.reshape(len(vectors), -1), name
        )

    def __iter__(self) -> Iterator[tuple]:
        return itertools.product(*(c.elements for c in self.components))

    def __len__(self) -> int:
        return math.prod(len(c) for c in self.components)

    def __contains__(self, a) -> bool:
        return self.contains(a)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProductLattice):
            return NotImplemented
        return self.components == other.components and self.reverse == other.reverse

    def __hash__(self) -> int:
        return hash((self.components, self.reverse))

    def __repr__(self) -> str:
        kind = "reversed " if self.reverse else ""
        return f"ProductLattice({kind}{len(self.components)} coordinates, {len(self)})"
