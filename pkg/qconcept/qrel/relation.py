"""Typed sets and Q-relations with composition and both implications."""
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator

from qconcept.algebra.quantaloid import FiniteQuantaloid
from qconcept.util.convert import object_name
from qconcept.util.errors import ShapeMismatch, TypeMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TypedSet:
    """A finite set whose elements carry quantaloid objects as types.

    Attributes:
        elements: Distinct element names, in canonical order.
        types: ``types[i]`` is the type ``|elements[i]|``.
    """

    elements: tuple
    types: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(x) for x in self.elements))
        object.__setattr__(self, "types", tuple(object_name(q) for q in self.types))
        if len(self.elements) != len(self.types):
            raise ShapeMismatch("typed set needs one type per element")
        if len(set(self.elements)) != len(self.elements):
            raise ShapeMismatch(f"typed set has duplicate elements {self.elements}")

    @classmethod
    def uniform(cls, elements, q: str) -> "TypedSet":
        """All elements of type `q`."""
        elements = tuple(elements)
        return cls(elements, (q,) * len(elements))

    def type_of(self, x: str) -> str:
        return self.types[self.index(x)]

    def index(self, x: str) -> int:
        return self.elements.index(x)

    def fibre(self, q: str) -> tuple:
        """The elements of type `q`."""
        return tuple(x for x, p in zip(self.elements, self.types) if p == q)

    def check(self, Q: FiniteQuantaloid) -> "TypedSet":
        """Raises `TypeMismatch` unless every type is an object of `Q`."""
        for x, q in zip(self.elements, self.types):
            if q not in Q.objects:
                raise TypeMismatch(
                    f"type {q} of {x} is not an object of {Q.name}", (x, q)
                )
        return self

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class QRelation:
    """A Q-relation ``φ : X ⇸ Y``: ``values[i][j] ∈ Q(|x_i|, |y_j|)``.

    Raises:
        ShapeMismatch: If `values` is not ``|X| × |Y|``.
        TypeMismatch: If a type is not an object or a value is not in its hom.
    """

    quantaloid: FiniteQuantaloid = field(compare=False, repr=False)
    source: TypedSet
    target: TypedSet
    values: tuple

    def __post_init__(self):
        Q, X, Y = self.quantaloid, self.source.check(self.quantaloid), self.target
        Y.check(Q)
        rows = tuple(tuple(str(v) for v in row) for row in self.values)
        if len(rows) != len(X) or any(len(row) != len(Y) for row in rows):
            raise ShapeMismatch(f"relation values must be {len(X)}x{len(Y)}")
        for x, p, row in zip(X.elements, X.types, rows):
            for y, q, value in zip(Y.elements, Y.types, row):
                if value not in Q.hom(p, q):
                    raise TypeMismatch(
                        f"value {value!r} at ({x}, {y}) is not in hom({p}, {q})",
                        (x, y, value),
                    )
        object.__setattr__(self, "values", rows)

    @classmethod
    def build(
        cls, Q: FiniteQuantaloid, X: TypedSet, Y: TypedSet, func: Callable
    ) -> "QRelation":
        """Tabulates ``func(x, y)`` over ``X × Y``."""
        return cls(Q, X, Y, tuple(tuple(func(x, y) for y in Y) for x in X))

    def __call__(self, x: str, y: str) -> str:
        return self.values[self.source.index(x)][self.target.index(y)]

    def items(self) -> Iterator[tuple]:
        """Yields ``(x, |x|, y, |y|, value)``."""
        for x, p, row in zip(self.source.elements, self.source.types, self.values):
            for y, q, value in zip(self.target.elements, self.target.types, row):
                yield x, p, y, q, value


def _check_shared(*relations: QRelation) -> FiniteQuantaloid:
    Q = relations[0].quantaloid
    if any(r.quantaloid is not Q for r in relations[1:]):
        raise TypeMismatch("relations live over different quantaloids")
    return Q


def compose_rel(psi: QRelation, phi: QRelation) -> QRelation:
    """``(ψ ∘ φ)(x, z) = ⋁_y ψ(y, z) ∘ φ(x, y)`` for ``φ : X ⇸ Y``, ``ψ : Y ⇸ Z``."""
    Q = _check_shared(psi, phi)
    if phi.target != psi.source:
        raise TypeMismatch("ψ ∘ φ needs the target of φ to be the source of ψ")
    X, Y, Z = phi.source, phi.target, psi.target

    def value(x, z):
        p, r = X.type_of(x), Z.type_of(z)
        return Q.hom(p, r).join(
            Q.compose(p, q, r, psi(y, z), phi(x, y))
            for y, q in zip(Y.elements, Y.types)
        )

    return QRelation.build(Q, X, Z, value)


def ldd_rel(xi: QRelation, phi: QRelation) -> QRelation:
    """``(ξ ↙ φ)(y, z) = ⋀_x ξ(x, z) ↙ φ(x, y)`` for ``ξ : X ⇸ Z``, ``φ : X ⇸ Y``."""
    Q = _check_shared(xi, phi)
    if xi.source != phi.source:
        raise TypeMismatch("ξ ↙ φ needs relations with a common source")
    X, Y, Z = phi.source, phi.target, xi.target

    def value(y, z):
        q, r = Y.type_of(y), Z.type_of(z)
        return Q.hom(q, r).meet(
            Q.ldd(p, q, r, xi(x, z), phi(x, y)) for x, p in zip(X.elements, X.types)
        )

    return QRelation.build(Q, Y, Z, value)


def rdd_rel(psi: QRelation, xi: QRelation) -> QRelation:
    """``(ψ ↘ ξ)(x, y) = ⋀_z ψ(y, z) ↘ ξ(x, z)`` for ``ψ : Y ⇸ Z``, ``ξ : X ⇸ Z``."""
    Q = _check_shared(psi, xi)
    if psi.target != xi.target:
        raise TypeMismatch("ψ ↘ ξ needs relations with a common target")
    X, Y, Z = xi.source, psi.source, psi.target

    def value(x, y):
        p, q = X.type_of(x), Y.type_of(y)
        return Q.hom(p, q).meet(
            Q.rdd(p, q, r, psi(y, z), xi(x, z)) for z, r in zip(Z.elements, Z.types)
        )

    return QRelation.build(Q, X, Y, value)


def identity_rel(Q: FiniteQuantaloid, X: TypedSet) -> QRelation:
    """``κ_X``: ``id_{|x|}`` on the diagonal and bottoms elsewhere."""

    def value(x, y):
        if x == y:
            return Q.identity(X.type_of(x))
        return Q.bottom(X.type_of(x), X.type_of(y))

    return QRelation.build(Q, X, X, value)


def leq_rel(a: QRelation, b: QRelation) -> bool:
    """Pointwise order of two relations with the same source and target."""
    Q = _check_shared(a, b)
    if a.source != b.source or a.target != b.target:
        raise TypeMismatch("only parallel relations are comparable")
    return all(
        Q.hom(p, q).leq(value, b(x, y)) for x, p, y, q, value in a.items()
    )
