"""Q-category structures on typed sets, distributors, and (co)presheaf fibres.

The fibre ``(PX)_q`` of presheaves of type ``q`` on a discrete ``X`` is the product
of ``hom(|x|, q)`` over ``x ∈ X`` with the pointwise order. The fibre
``(P†X)_q`` of copresheaves is the product of ``hom(q, |x|)`` with the REVERSE
pointwise order, which is its underlying order as a Q-category. The reversal
happens in `copresheaf_fibre` and nowhere else.
"""
import logging
from dataclasses import dataclass

from qconcept.algebra.quantaloid import FiniteQuantaloid
from qconcept.lattice.product import DEFAULT_LIMIT, ProductLattice
from qconcept.qrel.relation import (
    QRelation,
    TypedSet,
    compose_rel,
    identity_rel,
    ldd_rel,
    rdd_rel,
)
from qconcept.util.convert import vector_name
from qconcept.util.errors import (
    FibreTooLarge,
    NotReflexive,
    NotTransitive,
    TypeMismatch,
)

logger = logging.getLogger(__name__)

POINT = "*"
CATEGORY_LIMIT = 1024


@dataclass(frozen=True)
class QCategoryStructure:
    """A typed set with its hom relation ``1_X^♮ : X ⇸ X``."""

    carrier: TypedSet
    hom_rel: QRelation


@dataclass(frozen=True)
class Presheaf:
    """``μ : X ⇸ {q}``, stored as the value vector over `carrier`."""

    carrier: TypedSet
    q: str
    values: tuple


@dataclass(frozen=True)
class Copresheaf:
    """``λ : {q} ⇸ X``, stored as the value vector over `carrier`."""

    carrier: TypedSet
    q: str
    values: tuple


def discrete(Q: FiniteQuantaloid, X: TypedSet) -> QCategoryStructure:
    """The discrete structure on `X`, with ``1_X^♮ = κ_X``."""
    return QCategoryStructure(X, identity_rel(Q, X))


def validate_qcategory(c: QCategoryStructure) -> QCategoryStructure:
    """Checks ``κ_X ≤ 1_X^♮`` and ``1_X^♮ ∘ 1_X^♮ ≤ 1_X^♮``.

    Raises:
        NotReflexive: With the element whose diagonal is below its identity.
        NotTransitive: With the pair ``(x, z)`` where the composite is too big.
    """
    hom = c.hom_rel
    Q = hom.quantaloid
    if hom.source != c.carrier or hom.target != c.carrier:
        raise TypeMismatch("hom relation must be an endo-relation on the carrier")
    for x, q in zip(c.carrier.elements, c.carrier.types):
        if not Q.hom(q, q).leq(Q.identity(q), hom(x, x)):
            raise NotReflexive(f"id_{q} is not below 1^♮({x}, {x})", (x,))
    square = compose_rel(hom, hom)
    for x, p, z, r, value in square.items():
        if not Q.hom(p, r).leq(value, hom(x, z)):
            raise NotTransitive(f"1^♮ ∘ 1^♮ exceeds 1^♮ at ({x}, {z})", (x, z))
    return c


def is_distributor(
    phi: QRelation, cX: QCategoryStructure, cY: QCategoryStructure
) -> bool:
    """Whether ``1_Y^♮ ∘ φ ∘ 1_X^♮ = φ``."""
    if phi.source != cX.carrier or phi.target != cY.carrier:
        raise TypeMismatch("φ must run between the two carriers")
    return compose_rel(cY.hom_rel, compose_rel(phi, cX.hom_rel)) == phi


def underlying_leq(c: QCategoryStructure, a: str, b: str) -> bool:
    """``a ≤ b`` iff ``|a| = |b| = q`` and ``id_q ≤ 1^♮(a, b)``."""
    q = c.carrier.type_of(a)
    if c.carrier.type_of(b) != q:
        return False
    Q = c.hom_rel.quantaloid
    return Q.hom(q, q).leq(Q.identity(q), c.hom_rel(a, b))


def presheaf_fibre(
    Q: FiniteQuantaloid, X: TypedSet, q: str, limit: int = DEFAULT_LIMIT
) -> ProductLattice:
    """``(PX)_q = ∏_x hom(|x|, q)``, ordered pointwise.

    Raises:
        FibreTooLarge: If the product has more than `limit` elements.
    """
    fibre = ProductLattice(
        tuple(Q.hom(p, q) for p in X.check(Q).types),
        labels=X.elements,
        limit=limit,
    )
    fibre.check_size(limit, f"presheaf fibre at {q}")
    logger.debug(f"(PX)_{q} - {len(fibre)} elements")
    return fibre


def copresheaf_fibre(
    Q: FiniteQuantaloid, X: TypedSet, q: str, limit: int = DEFAULT_LIMIT
) -> ProductLattice:
    """``(P†X)_q = ∏_x hom(q, |x|)`` with the reverse of the pointwise order.

    Raises:
        FibreTooLarge: If the product has more than `limit` elements.
    """
    fibre = ProductLattice(
        tuple(Q.hom(q, p) for p in X.check(Q).types),
        reverse=True,
        labels=X.elements,
        limit=limit,
    )
    fibre.check_size(limit, f"copresheaf fibre at {q}")
    logger.debug(f"(P†X)_{q} - {len(fibre)} elements")
    return fibre


def presheaf_to_relation(Q: FiniteQuantaloid, mu: Presheaf) -> QRelation:
    """The presheaf as a relation ``X ⇸ {q}``."""
    point = TypedSet((POINT,), (mu.q,))
    return QRelation(Q, mu.carrier, point, tuple((v,) for v in mu.values))


def copresheaf_to_relation(Q: FiniteQuantaloid, lam: Copresheaf) -> QRelation:
    """The copresheaf as a relation ``{q} ⇸ X``."""
    point = TypedSet((POINT,), (lam.q,))
    return QRelation(Q, point, lam.carrier, (tuple(lam.values),))


def element_name(q: str, vector: tuple) -> str:
    """Name of a (co)presheaf as an element of a presheaf category."""
    return f"{vector_name(vector)}@{q}"


def _category(Q, X, types, limit, presheaves: bool) -> QCategoryStructure:
    members = []
    for q in types:
        if presheaves:
            fibre = presheaf_fibre(Q, X, q, limit)
            members.extend(presheaf_to_relation(Q, Presheaf(X, q, v)) for v in fibre)
        else:
            fibre = copresheaf_fibre(Q, X, q, limit)
            members.extend(
                copresheaf_to_relation(Q, Copresheaf(X, q, v)) for v in fibre
            )
        if len(members) > limit:
            raise FibreTooLarge(
                f"category has more than {limit} elements; raise --limit"
            )
    names, kinds = [], []
    for rel in members:
        if presheaves:
            q, vector = rel.target.types[0], tuple(row[0] for row in rel.values)
        else:
            q, vector = rel.source.types[0], rel.values[0]
        names.append(element_name(q, vector))
        kinds.append(q)
    if presheaves:
        rows = [[ldd_rel(b, a).values[0][0] for b in members] for a in members]
    else:
        rows = [[rdd_rel(b, a).values[0][0] for b in members] for a in members]
    carrier = TypedSet(tuple(names), tuple(kinds))
    logger.debug(f"category of {len(members)} elements")
    return QCategoryStructure(carrier, QRelation(Q, carrier, carrier, tuple(rows)))


def presheaf_category(
    Q: FiniteQuantaloid, X: TypedSet, types: list, limit: int = CATEGORY_LIMIT
) -> QCategoryStructure:
    """The presheaves of the given types as a Q-category.

    ``PX(μ, μ') = μ' ↙ μ = ⋀_x μ'(x) ↙ μ(x) ∈ Q(|μ|, |μ'|)``. Elements are named
    by `element_name` and listed fibre by fibre in canonical order.
    """
    return _category(Q, X, types, limit, presheaves=True)


def copresheaf_category(
    Q: FiniteQuantaloid, X: TypedSet, types: list, limit: int = CATEGORY_LIMIT
) -> QCategoryStructure:
    """The copresheaves of the given types as a Q-category.

    ``P†X(λ, λ') = λ' ↘ λ = ⋀_x λ'(x) ↘ λ(x) ∈ Q(|λ|, |λ'|)``, so its underlying
    order is the reverse pointwise order.
    """
    return _category(Q, X, types, limit, presheaves=False)
