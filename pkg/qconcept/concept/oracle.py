"""Concept lattices straight from the multi-adjoint formulas.

Nothing here touches quantaloids or Q-relations: the derivation operators are
written with the triples' conjunctions and residuals and the lattices' joins and
meets, and the fixed points are found by applying the closure to every element
of the full function space.
"""
import logging

from qconcept.concept.engine import ConceptLattice, from_fixed_points
from qconcept.concept.frame import FIBRE, Context, MultiAdjointFrame, normalize_mode
from qconcept.lattice.order import ClosureOperator, MonotoneMap, compose, fixed_points
from qconcept.lattice.product import DEFAULT_LIMIT, ProductLattice
from qconcept.util.errors import CarrierTooLarge, FrameMismatch, TypeOutOfRange

logger = logging.getLogger(__name__)


class _Derivation:
    """One derivation operator of a context, bound to its frame (picklable)."""

    def __init__(self, f: MultiAdjointFrame, ctx: Context, which: str):
        self.f = f
        self.ctx = ctx
        self.which = which

    def __call__(self, vector: tuple) -> tuple:
        return getattr(self, self.which)(vector)

    def _cells(self):
        for i, row in enumerate(self.ctx.phi):
            for j, value in enumerate(row):
                yield i, j, value, self.f.triple(self.ctx.types[j])

    def formal_up(self, mu: tuple) -> tuple:
        """``y ↦ ⋀_x φ(x,y) ↘_|y| μ(x)`` in ``L2``."""
        out = [[] for _ in self.ctx.objects]
        for i, j, value, t in self._cells():
            out[j].append(t.lua(value, mu[i]))
        return tuple(self.f.L2.meet(col) for col in out)

    def formal_down(self, lam: tuple) -> tuple:
        """``x ↦ ⋀_y φ(x,y) ↙^|y| λ(y)`` in ``L1``."""
        out = [[] for _ in self.ctx.attributes]
        for i, j, value, t in self._cells():
            out[i].append(t.lda(value, lam[j]))
        return tuple(self.f.L1.meet(row) for row in out)

    def possibility(self, lam: tuple) -> tuple:
        """``x ↦ ⋁_y φ(x,y) ⊗_|y| λ(y)`` in ``L1``."""
        out = [[] for _ in self.ctx.attributes]
        for i, j, value, t in self._cells():
            out[i].append(t.conj(value, lam[j]))
        return tuple(self.f.L1.join(row) for row in out)

    def necessity(self, mu: tuple) -> tuple:
        """``y ↦ ⋀_x μ(x) ↘_|y| φ(x,y)`` in ``L2``."""
        out = [[] for _ in self.ctx.objects]
        for i, j, value, t in self._cells():
            out[j].append(t.lua(mu[i], value))
        return tuple(self.f.L2.meet(col) for col in out)

    def object_image(self, mu: tuple) -> tuple:
        """``y ↦ ⋁_x μ(x) ⊗_|y| φ(x,y)`` in ``L2``."""
        out = [[] for _ in self.ctx.objects]
        for i, j, value, t in self._cells():
            out[j].append(t.conj(mu[i], value))
        return tuple(self.f.L2.join(col) for col in out)

    def object_preimage(self, lam: tuple) -> tuple:
        """``x ↦ ⋀_y λ(y) ↙^|y| φ(x,y)`` in ``L1``."""
        out = [[] for _ in self.ctx.attributes]
        for i, j, value, t in self._cells():
            out[i].append(t.lda(lam[j], value))
        return tuple(self.f.L1.meet(row) for row in out)


def oracle_direct(
    f: MultiAdjointFrame,
    ctx: Context,
    mode: str | None = None,
    limit: int = DEFAULT_LIMIT,
) -> ConceptLattice:
    """Brute-force concept lattice from the direct formulas.

    Args:
        f: The frame.
        ctx: The context (object types already in ``1..n``).
        mode: Defaults to the frame mode; must agree with it.
        limit: Largest function space enumerated.

    Raises:
        CarrierTooLarge: The function space exceeds `limit`.
    """
    mode = normalize_mode(mode or f.mode)
    if mode != f.mode:
        raise FrameMismatch(f"oracle for {mode} needs a {mode} frame, got {f.mode}")
    for y, t in zip(ctx.objects, ctx.types):
        if not 1 <= t <= f.n:
            raise TypeOutOfRange(f"object {y} has type {t}, expected 1..{f.n}", (y, t))
    X, Y = ctx.attributes, ctx.objects
    if mode == "formal":
        carrier = ProductLattice((f.L1,) * len(X), labels=X)
        partner_space = ProductLattice((f.L2,) * len(Y), reverse=True, labels=Y)
        left, right = "formal_up", "formal_down"
        labels = (X, Y)
    elif mode == "property":
        carrier = ProductLattice((f.L2,) * len(Y), labels=Y)
        partner_space = ProductLattice((f.L1,) * len(X), labels=X)
        left, right = "possibility", "necessity"
        labels = (Y, X)
    else:
        carrier = ProductLattice((f.L2,) * len(Y), reverse=True, labels=Y)
        partner_space = ProductLattice((f.L1,) * len(X), reverse=True, labels=X)
        left, right = "object_preimage", "object_image"
        labels = (Y, X)
    if len(carrier) > limit:
        raise CarrierTooLarge(
            f"oracle carrier has {len(carrier)} elements (limit {limit}); raise --limit"
        )
    up = MonotoneMap(carrier, partner_space, _Derivation(f, ctx, left), left)
    down = MonotoneMap(partner_space, carrier, _Derivation(f, ctx, right), right)
    closure = ClosureOperator(carrier, compose(down, up))
    fixed = fixed_points(closure, validate=False)
    lattice = from_fixed_points(mode, fixed, up, *labels, FIBRE[mode])
    logger.debug(f"oracle {mode} - {len(lattice)} concepts of {len(carrier)}")
    return lattice
