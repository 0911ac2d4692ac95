"""Isbell, Kan and dual Kan adjunctions of a Q-relation, restricted to fibres.

For ``φ : X ⇸ Y`` and an object ``q``:

    isbell    (PX)_q  ⇄ (P†Y)_q    φ↑μ(y)  = ⋀_x φ(x,y) ↙ μ(x)
                                    φ↓λ(x)  = ⋀_y λ(y) ↘ φ(x,y)
    kan       (PY)_q  ⇄ (PX)_q     φ*λ(x)  = ⋁_y λ(y) ∘ φ(x,y)
                                    φ_*μ(y) = ⋀_x μ(x) ↙ φ(x,y)
    dual_kan  (P†Y)_q ⇄ (P†X)_q    φ_†λ(x) = ⋀_y φ(x,y) ↘ λ(y)
                                    φ†μ(y)  = ⋁_x φ(x,y) ∘ μ(x)

In each row the first map is the left adjoint, and the closure is
``right ∘ left`` on the first fibre. Copresheaf fibres carry the reversed order,
so all three closures are closure operators in the ordinary sense and their
fixed points are the image of the right adjoint.
"""
import logging
from dataclasses import dataclass

from qconcept.lattice.lattice import Lattice
from qconcept.lattice.order import (
    PAIR_LIMIT,
    ClosureOperator,
    FixedPointSet,
    GaloisPair,
    MonotoneMap,
)
from qconcept.lattice.product import DEFAULT_LIMIT
from qconcept.qrel.category import (
    Copresheaf,
    Presheaf,
    copresheaf_fibre,
    presheaf_fibre,
)
from qconcept.qrel.relation import QRelation
from qconcept.util import parallel
from qconcept.util.errors import ParseError, StrategyMismatch, TypeMismatch

logger = logging.getLogger(__name__)

KINDS = ("isbell", "kan", "dual_kan")
STRATEGIES = ("brute", "generators", "both")
BRUTE_LIMIT = 4096


def _up(phi: QRelation, q: str, mu: tuple) -> tuple:
    Q, X, Y = phi.quantaloid, phi.source, phi.target
    return tuple(
        Q.hom(q, s).meet(
            Q.ldd(p, q, s, phi.values[i][j], mu[i]) for i, p in enumerate(X.types)
        )
        for j, s in enumerate(Y.types)
    )


def _down(phi: QRelation, q: str, lam: tuple) -> tuple:
    Q, X, Y = phi.quantaloid, phi.source, phi.target
    return tuple(
        Q.hom(p, q).meet(
            Q.rdd(p, q, s, lam[j], phi.values[i][j]) for j, s in enumerate(Y.types)
        )
        for i, p in enumerate(X.types)
    )


def _star(phi: QRelation, q: str, lam: tuple) -> tuple:
    Q, X, Y = phi.quantaloid, phi.source, phi.target
    return tuple(
        Q.hom(p, q).join(
            Q.compose(p, s, q, lam[j], phi.values[i][j]) for j, s in enumerate(Y.types)
        )
        for i, p in enumerate(X.types)
    )


def _lower(phi: QRelation, q: str, mu: tuple) -> tuple:
    Q, X, Y = phi.quantaloid, phi.source, phi.target
    return tuple(
        Q.hom(s, q).meet(
            Q.ldd(p, s, q, mu[i], phi.values[i][j]) for i, p in enumerate(X.types)
        )
        for j, s in enumerate(Y.types)
    )


def _dagger_lower(phi: QRelation, q: str, lam: tuple) -> tuple:
    Q, X, Y = phi.quantaloid, phi.source, phi.target
    return tuple(
        Q.hom(q, p).meet(
            Q.rdd(q, p, s, phi.values[i][j], lam[j]) for j, s in enumerate(Y.types)
        )
        for i, p in enumerate(X.types)
    )


def _dagger_upper(phi: QRelation, q: str, mu: tuple) -> tuple:
    Q, X, Y = phi.quantaloid, phi.source, phi.target
    return tuple(
        Q.hom(q, s).join(
            Q.compose(q, p, s, phi.values[i][j], mu[i]) for i, p in enumerate(X.types)
        )
        for j, s in enumerate(Y.types)
    )


def _checked(vector, carrier, homs, what: str) -> tuple:
    if vector.carrier != carrier:
        raise TypeMismatch(f"{what} lives on the wrong typed set")
    values = tuple(vector.values)
    if len(values) != len(homs) or any(v not in h for v, h in zip(values, homs)):
        raise TypeMismatch(f"{what} has a value outside its hom", values)
    return values


def isbell_up(phi: QRelation, mu: Presheaf) -> Copresheaf:
    """``φ↑μ``: a presheaf on X of type q to a copresheaf on Y of type q."""
    Q = phi.quantaloid
    homs = [Q.hom(p, mu.q) for p in phi.source.types]
    values = _checked(mu, phi.source, homs, "μ")
    return Copresheaf(phi.target, mu.q, _up(phi, mu.q, values))


def isbell_down(phi: QRelation, lam: Copresheaf) -> Presheaf:
    """``φ↓λ``: a copresheaf on Y of type q to a presheaf on X of type q."""
    Q = phi.quantaloid
    homs = [Q.hom(lam.q, s) for s in phi.target.types]
    values = _checked(lam, phi.target, homs, "λ")
    return Presheaf(phi.source, lam.q, _down(phi, lam.q, values))


def kan_star(phi: QRelation, lam: Presheaf) -> Presheaf:
    """``φ*λ``: a presheaf on Y of type q to a presheaf on X of type q."""
    Q = phi.quantaloid
    homs = [Q.hom(s, lam.q) for s in phi.target.types]
    values = _checked(lam, phi.target, homs, "λ")
    return Presheaf(phi.source, lam.q, _star(phi, lam.q, values))


def kan_lower(phi: QRelation, mu: Presheaf) -> Presheaf:
    """``φ_*μ``: a presheaf on X of type q to a presheaf on Y of type q."""
    Q = phi.quantaloid
    homs = [Q.hom(p, mu.q) for p in phi.source.types]
    values = _checked(mu, phi.source, homs, "μ")
    return Presheaf(phi.target, mu.q, _lower(phi, mu.q, values))


def dual_kan_lower(phi: QRelation, lam: Copresheaf) -> Copresheaf:
    """``φ_†λ``: a copresheaf on Y of type q to a copresheaf on X of type q."""
    Q = phi.quantaloid
    homs = [Q.hom(lam.q, s) for s in phi.target.types]
    values = _checked(lam, phi.target, homs, "λ")
    return Copresheaf(phi.source, lam.q, _dagger_lower(phi, lam.q, values))


def dual_kan_upper(phi: QRelation, mu: Copresheaf) -> Copresheaf:
    """``φ†μ``: a copresheaf on X of type q to a copresheaf on Y of type q."""
    Q = phi.quantaloid
    homs = [Q.hom(mu.q, p) for p in phi.source.types]
    values = _checked(mu, phi.source, homs, "μ")
    return Copresheaf(phi.target, mu.q, _dagger_upper(phi, mu.q, values))


class _FibreMap:
    """One of the six formulas with ``φ`` and ``q`` bound (picklable)."""

    def __init__(self, formula, phi: QRelation, q: str):
        self.formula = formula
        self.phi = phi
        self.q = q

    def __call__(self, vector: tuple) -> tuple:
        return self.formula(self.phi, self.q, vector)


@dataclass
class FibreAdjunction(GaloisPair):
    """A fibre restriction ``left ⊣ right`` with the construction it came from."""

    kind: str = ""
    q: str = ""

    @property
    def provenance(self) -> str:
        return f"{self.kind}@{self.q}"

    @property
    def carrier(self) -> Lattice:
        """The fibre carrying the closure ``right ∘ left``."""
        return self.left.source


def fibre_adjunction(
    kind: str,
    phi: QRelation,
    q: str,
    limit: int = DEFAULT_LIMIT,
    pair_limit: int = PAIR_LIMIT,
    validate: bool = True,
) -> FibreAdjunction:
    """Materializes the fibre restriction of one of the three adjunctions.

    Args:
        kind: ``isbell``, ``kan`` or ``dual_kan``.
        phi: The Q-relation ``X ⇸ Y`` (discrete X and Y).
        q: The fibre object.
        limit: Size guard for each fibre.
        pair_limit: Passed to `is_galois`.
        validate: Check the Galois property.

    Raises:
        ParseError: Unknown `kind`.
        FibreTooLarge: A fibre exceeds `limit`.
        GaloisFailure: The maps are not adjoint.
    """
    Q, X, Y = phi.quantaloid, phi.source, phi.target
    if kind == "isbell":
        A, B = presheaf_fibre(Q, X, q, limit), copresheaf_fibre(Q, Y, q, limit)
        formulas, names = (_up, _down), ("φ↑", "φ↓")
    elif kind == "kan":
        A, B = presheaf_fibre(Q, Y, q, limit), presheaf_fibre(Q, X, q, limit)
        formulas, names = (_star, _lower), ("φ*", "φ_*")
    elif kind == "dual_kan":
        A, B = copresheaf_fibre(Q, Y, q, limit), copresheaf_fibre(Q, X, q, limit)
        formulas, names = (_dagger_lower, _dagger_upper), ("φ_†", "φ†")
    else:
        raise ParseError(f"unknown adjunction {kind!r} (expected one of {KINDS})")
    left = MonotoneMap(A, B, _FibreMap(formulas[0], phi, q), names[0])
    right = MonotoneMap(B, A, _FibreMap(formulas[1], phi, q), names[1])
    adj = FibreAdjunction(left, right, kind, q)
    if validate:
        adj.validate(pair_limit)
    logger.debug(f"{adj.provenance} - {len(A)} ⇄ {len(B)}")
    return adj


class _FixedPointJob:
    def __init__(self, closure: ClosureOperator):
        self.closure = closure

    def run(self, chunk: list) -> list:
        return [a for a in chunk if self.closure(a) == a]


def brute_fixed_points(adj: FibreAdjunction, cores: int = 1) -> FixedPointSet:
    """Applies the closure to every carrier element, in parallel when ``cores > 1``."""
    job = _FixedPointJob(adj.closure())
    points = parallel.run(list(adj.carrier), job.run, cores)
    return FixedPointSet(adj.carrier, tuple(points), adj.provenance)


def generators(adj: FibreAdjunction) -> list:
    """Images under the right adjoint of the single-coordinate inputs.

    Every element of the right adjoint's source is the meet of the vectors that
    agree with its top everywhere but one coordinate.
    """
    B = adj.right.source
    inputs = []
    for i, component in enumerate(B.components):
        for v in component:
            vector = B.top[:i] + (v,) + B.top[i + 1 :]
            if vector != B.top:
                inputs.append(vector)
    return [adj.right(b) for b in inputs]


def meet_closure(carrier: Lattice, seeds) -> set:
    """The smallest meet-closed subset of `carrier` containing `seeds` and its top."""
    points = {carrier.top} | set(seeds)
    frontier = set(points)
    rounds = 0
    while frontier:
        rounds += 1
        found = set()
        for a in carrier.sorted(frontier):
            for b in carrier.sorted(points):
                m = carrier.meet2(a, b)
                if m not in points:
                    found.add(m)
        points |= found
        frontier = found
    logger.debug(f"{len(points)} points after {rounds} rounds")
    return points


def generator_fixed_points(adj: FibreAdjunction) -> FixedPointSet:
    """The image of the right adjoint as the meet-closure of generator images."""
    points = meet_closure(adj.carrier, generators(adj))
    return FixedPointSet(adj.carrier, tuple(points), adj.provenance)


def fixed_point_set(
    adj: FibreAdjunction,
    strategy: str = "both",
    brute_limit: int = BRUTE_LIMIT,
    cores: int = 1,
) -> FixedPointSet:
    """Fixed points of ``right ∘ left`` on the adjunction's carrier.

    Args:
        adj: A validated fibre adjunction.
        strategy: ``brute``, ``generators``, or ``both`` (generators, checked
            against brute force when the carrier has at most `brute_limit`
            elements).
        brute_limit: Largest carrier cross-checked by ``both``.
        cores: Cores for the brute-force pass.

    Raises:
        StrategyMismatch: Both strategies ran and disagree.
    """
    if strategy not in STRATEGIES:
        raise ParseError(
            f"unknown strategy {strategy!r} (expected one of {STRATEGIES})"
        )
    if strategy == "brute":
        return brute_fixed_points(adj, cores)
    fixed = generator_fixed_points(adj)
    if strategy == "generators":
        return fixed
    if len(adj.carrier) > brute_limit:
        logger.warning(
            f"{adj.provenance} - carrier {len(adj.carrier)} > {brute_limit}, "
            "brute cross-check skipped"
        )
        return fixed
    brute = brute_fixed_points(adj, cores)
    if brute != fixed:
        diff = set(brute.points) ^ set(fixed.points)
        raise StrategyMismatch(
            f"{adj.provenance}: brute force found {len(brute)} fixed points, "
            f"generators {len(fixed)}",
            tuple(adj.carrier.sorted(diff))[:1],
        )
    return fixed
