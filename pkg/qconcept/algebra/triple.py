"""Adjoint triples ``(⊗, ↙, ↘)`` determined by a join-preserving conjunction.

A conjunction ``⊗ : left × right -> value`` preserving joins in each argument has
unique residuals

    x ⊗ y ≤ z  ⟺  x ≤ z ↙ y  ⟺  y ≤ z ↘ x

which are derived here by exhaustive maximization and never supplied by the user.
The three lattices are roles: formal frames use ``(L1, L2, P)``, property-oriented
frames ``(P, L2, L1)`` and object-oriented frames ``(L1, P, L2)``.
"""
import itertools
import logging

from qconcept.lattice.lattice import FiniteLattice
from qconcept.util.errors import NotJoinPreserving, ParseError, ShapeMismatch

logger = logging.getLogger(__name__)

BUILTIN = ("godel", "lukasiewicz", "meet")


class AdjointTriple:
    """A validated adjoint triple with precomputed residual tables.

    Args:
        left: Domain of the first argument of ``⊗``.
        right: Domain of the second argument of ``⊗``.
        value: Codomain of ``⊗``.
        conjunction: Rows indexed by `left` elements, columns by `right` elements,
            entries naming `value` elements.
        name: Label used in logs and error messages.

    Raises:
        ParseError: If the table has the wrong shape or unknown entries.
        NotJoinPreserving: If ``⊗`` fails to preserve a binary or an empty join.
    """

    def __init__(
        self,
        left: FiniteLattice,
        right: FiniteLattice,
        value: FiniteLattice,
        conjunction: list,
        name: str = "",
    ):
        self.left = left
        self.right = right
        self.value = value
        self.name = name
        self._conj = self._parse(conjunction)
        self._check_joins()
        self._lda = {
            (z, y): left.join(x for x in left if value.leq(self._conj[x, y], z))
            for z in value
            for y in right
        }
        self._lua = {
            (z, x): right.join(y for y in right if value.leq(self._conj[x, y], z))
            for z in value
            for x in left
        }

    def _parse(self, conjunction: list) -> dict:
        rows = list(conjunction) if isinstance(conjunction, (list, tuple)) else None
        if rows is None or len(rows) != len(self.left):
            raise ParseError(
                f"triple {self.name}: conjunction needs {len(self.left)} rows"
            )
        table = {}
        for x, row in zip(self.left, rows):
            if not isinstance(row, (list, tuple)) or len(row) != len(self.right):
                raise ParseError(
                    f"triple {self.name}: row {x} needs {len(self.right)} entries"
                )
            for y, z in zip(self.right, row):
                table[x, y] = self.value.check_element(
                    str(z), f"in conjunction {self.name} at ({x}, {y})"
                )
        return table

    def _check_joins(self) -> None:
        L, R, V, conj = self.left, self.right, self.value, self._conj
        for y in R:
            if conj[L.bottom, y] != V.bottom:
                raise NotJoinPreserving(
                    f"{self.name}: ⊥ ⊗ y != ⊥ (empty join, first argument)",
                    (L.bottom, y),
                )
        for x in L:
            if conj[x, R.bottom] != V.bottom:
                raise NotJoinPreserving(
                    f"{self.name}: x ⊗ ⊥ != ⊥ (empty join, second argument)",
                    (x, R.bottom),
                )
        for x1, x2 in itertools.combinations(L, 2):
            for y in R:
                if conj[L.join2(x1, x2), y] != V.join2(conj[x1, y], conj[x2, y]):
                    raise NotJoinPreserving(
                        f"{self.name}: join not preserved in first argument",
                        (x1, x2, y),
                    )
        for y1, y2 in itertools.combinations(R, 2):
            for x in L:
                if conj[x, R.join2(y1, y2)] != V.join2(conj[x, y1], conj[x, y2]):
                    raise NotJoinPreserving(
                        f"{self.name}: join not preserved in second argument",
                        (x, y1, y2),
                    )

    def conj(self, x: str, y: str) -> str:
        """``x ⊗ y``."""
        return self._conj[x, y]

    def lda(self, z: str, y: str) -> str:
        """``z ↙ y``: the greatest ``x`` with ``x ⊗ y ≤ z``."""
        return self._lda[z, y]

    def lua(self, z: str, x: str) -> str:
        """``z ↘ x``: the greatest ``y`` with ``x ⊗ y ≤ z``."""
        return self._lua[z, x]

    def table(self) -> list:
        """The conjunction as nested lists (rows `left`, columns `right`)."""
        return [[self._conj[x, y] for y in self.right] for x in self.left]

    def lattices(self) -> tuple:
        return (self.left, self.right, self.value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdjointTriple):
            return NotImplemented
        return self.lattices() == other.lattices() and self._conj == other._conj

    def __hash__(self) -> int:
        return hash((self.lattices(), tuple(sorted(self._conj.items()))))

    def __repr__(self) -> str:
        return f"AdjointTriple({self.name})"


def validate_triple(
    conjunction: list | str,
    left: FiniteLattice,
    right: FiniteLattice,
    value: FiniteLattice,
    name: str = "",
) -> AdjointTriple:
    """Validates a conjunction table (or builtin name) and returns the triple.

    Args:
        conjunction: Nested rows of value names, or one of ``godel``,
            ``lukasiewicz``, ``meet``.
        left: First argument lattice.
        right: Second argument lattice.
        value: Value lattice.
        name: Label used in error messages.
    """
    if isinstance(conjunction, str):
        conjunction = builtin_table(conjunction, left, right, value)
    triple = AdjointTriple(left, right, value, conjunction, name)
    logger.debug(f"{name} - {len(left)}x{len(right)}->{len(value)}")
    return triple


def residual_lda(t: AdjointTriple, z: str, y: str) -> str:
    """The greatest left element ``x`` with ``x ⊗ y ≤ z``."""
    return t.lda(z, y)


def residual_lua(t: AdjointTriple, z: str, x: str) -> str:
    """The greatest right element ``y`` with ``x ⊗ y ≤ z``."""
    return t.lua(z, x)


def check_adjointness(t: AdjointTriple) -> tuple | None:
    """Returns ``(x, y, z)`` breaking ``x⊗y ≤ z ⟺ x ≤ z↙y ⟺ y ≤ z↘x``, or ``None``."""
    for x, y, z in itertools.product(t.left, t.right, t.value):
        a = t.value.leq(t.conj(x, y), z)
        b = t.left.leq(x, t.lda(z, y))
        c = t.right.leq(y, t.lua(z, x))
        if not a == b == c:
            return (x, y, z)
    return None


def check_monotonicity(t: AdjointTriple) -> tuple | None:
    """Returns a witness against the monotonicity forced by adjointness, or ``None``.

    Notes:
        For ``x' ≤ x``, ``y' ≤ y``, ``z ≤ z'`` it checks ``x'⊗y' ≤ x⊗y``,
        ``z↙y ≤ z'↙y'`` and ``z↘x ≤ z'↘x'``.
    """
    L, R, V = t.lattices()
    below_left = [(a, b) for a in L for b in L if L.leq(a, b)]
    below_right = [(a, b) for a in R for b in R if R.leq(a, b)]
    below_value = [(a, b) for a in V for b in V if V.leq(a, b)]
    for (x1, x), (y1, y) in itertools.product(below_left, below_right):
        if not V.leq(t.conj(x1, y1), t.conj(x, y)):
            return ("⊗", x1, y1, x, y)
    for (z, z1), (y1, y) in itertools.product(below_value, below_right):
        if not L.leq(t.lda(z, y), t.lda(z1, y1)):
            return ("↙", z, y, z1, y1)
    for (z, z1), (x1, x) in itertools.product(below_value, below_left):
        if not R.leq(t.lua(z, x), t.lua(z1, x1)):
            return ("↘", z, x, z1, x1)
    return None


def conjunction_table(
    left: FiniteLattice, right: FiniteLattice, func
) -> list:
    """Tabulates ``func(x, y)`` over ``left × right``."""
    return [[func(x, y) for y in right] for x in left]


def builtin_table(
    name: str, left: FiniteLattice, right: FiniteLattice, value: FiniteLattice
) -> list:
    """Conjunction tables for the builtin names.

    Notes:
        - ``meet`` needs three equal lattices and tabulates ``x ∧ y``.
        - ``godel`` (minimum) and ``lukasiewicz`` (``max(0, i + j - n)`` on ranks
            ``0..n``) need three equal chains.
    """
    if name not in BUILTIN:
        raise ParseError(f"unknown conjunction {name!r} (builtin: {BUILTIN})")
    if not left == right == value:
        raise ShapeMismatch(f"builtin conjunction {name} needs three equal lattices")
    if name == "meet":
        return conjunction_table(left, right, left.meet2)
    if not left.is_chain():
        raise ShapeMismatch(f"builtin conjunction {name} needs a chain")
    n = len(left) - 1
    rank = left.index
    if name == "godel":
        return conjunction_table(left, right, lambda x, y: left.meet2(x, y))
    return conjunction_table(
        left, right, lambda x, y: left.elements[max(0, rank[x] + rank[y] - n)]
    )


def godel(chain: FiniteLattice, name: str = "godel") -> AdjointTriple:
    """The Gödel (minimum) triple on a chain."""
    return validate_triple("godel", chain, chain, chain, name)


def lukasiewicz(chain: FiniteLattice, name: str = "lukasiewicz") -> AdjointTriple:
    """The Łukasiewicz triple on a chain, ``i ⊗ j = max(0, i + j - n)`` on ranks."""
    return validate_triple("lukasiewicz", chain, chain, chain, name)


def meet(lattice: FiniteLattice, name: str = "meet") -> AdjointTriple:
    """The triple ``x ⊗ y = x ∧ y`` on a lattice.

    Notes:
        Join-preserving only on distributive lattices; validation rejects others.
    """
    return validate_triple("meet", lattice, lattice, lattice, name)
