"""Concept lattices of multi-adjoint frames as fixed points of fibre adjunctions.

Example:
    ```py
    >>> from qconcept.concept import engine, frame
    >>> f = frame.load_frame("test/fixtures/frame-crisp-formal.json")
    >>> ctx = frame.load_context("test/fixtures/context-identity.json", f)
    >>> len(engine.compute(f, ctx))
    4

    ```
"""
import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np
import pandas as pd

from qconcept.concept.adjunction import BRUTE_LIMIT, fibre_adjunction, fixed_point_set
from qconcept.concept.frame import (
    ADJUNCTION,
    FIBRE,
    Context,
    MultiAdjointFrame,
    context_to_qrelation,
    frame_to_quantaloid,
)
from qconcept.lattice.order import PAIR_LIMIT, FixedPointSet
from qconcept.lattice.product import DEFAULT_LIMIT
from qconcept.util.convert import vector_name
from qconcept.util.errors import FrameMismatch

logger = logging.getLogger(__name__)


@dataclass
class ConceptLattice:
    """Concepts as adjoint pairs ``(fixed, partner)`` with their order.

    Attributes:
        mode: Frame mode the lattice was computed for.
        q: Fibre object carrying the fixed points.
        fixed_labels: Coordinates of the fixed side (attributes for ``formal``,
            objects otherwise).
        partner_labels: Coordinates of the partner side.
        concepts: Pairs of element-name vectors, in canonical order.
        order: ``order[i, j]`` iff concept ``i`` is below concept ``j``.
    """

    mode: str
    q: str
    fixed_labels: tuple
    partner_labels: tuple
    concepts: tuple
    order: np.ndarray

    @property
    def provenance(self) -> str:
        return f"{self.mode}@{self.q}"

    def __len__(self) -> int:
        return len(self.concepts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConceptLattice):
            return NotImplemented
        same_frame = (self.mode, self.q, self.fixed_labels, self.partner_labels) == (
            other.mode,
            other.q,
            other.fixed_labels,
            other.partner_labels,
        )
        return same_frame and compare(self, other)[0]

    def label(self, i: int) -> str:
        fixed, partner = self.concepts[i]
        return f"⟨{vector_name(fixed)} | {vector_name(partner)}⟩"

    def hasse(self) -> nx.DiGraph:
        """Covering edges ``lower -> upper`` between concept indices."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from(
            (int(i), int(j)) for i, j in np.argwhere(self.order) if i != j
        )
        return nx.transitive_reduction(graph)

    def to_frame(self) -> pd.DataFrame:
        """One row per concept, one column per coordinate of each side."""
        rows = []
        for fixed, partner in self.concepts:
            row = {f"fixed:{k}": v for k, v in zip(self.fixed_labels, fixed)}
            partners = zip(self.partner_labels, partner)
            row.update({f"partner:{k}": v for k, v in partners})
            rows.append(row)
        columns = [f"fixed:{k}" for k in self.fixed_labels]
        columns += [f"partner:{k}" for k in self.partner_labels]
        return pd.DataFrame(rows, columns=columns)


def from_fixed_points(
    mode: str,
    fixed: FixedPointSet,
    partner,
    fixed_labels: tuple,
    partner_labels: tuple,
    q: str,
) -> ConceptLattice:
    """Pairs every fixed point with its image under `partner`."""
    concepts = tuple((tuple(a), tuple(partner(a))) for a in fixed)
    return ConceptLattice(
        mode,
        q,
        tuple(fixed_labels),
        tuple(partner_labels),
        concepts,
        fixed.order_matrix(),
    )


def _pipeline(
    f: MultiAdjointFrame,
    ctx: Context,
    mode: str,
    strategy: str,
    limit: int,
    brute_limit: int,
    pair_limit: int,
    cores: int,
) -> ConceptLattice:
    if f.mode != mode:
        raise FrameMismatch(f"a {mode} lattice needs a {mode} frame, got {f.mode}")
    phi = context_to_qrelation(f, ctx)
    q = FIBRE[mode]
    adj = fibre_adjunction(ADJUNCTION[mode], phi, q, limit, pair_limit)
    fixed = fixed_point_set(adj, strategy, brute_limit, cores)
    if mode == "formal":
        labels = (ctx.attributes, ctx.objects)
    else:
        labels = (ctx.objects, ctx.attributes)
    lattice = from_fixed_points(mode, fixed, adj.left, *labels, q)
    logger.debug(f"{lattice.provenance} - {len(lattice)} concepts")
    return lattice


def concept_lattice(
    f: MultiAdjointFrame,
    ctx: Context,
    strategy: str = "both",
    limit: int = DEFAULT_LIMIT,
    brute_limit: int = BRUTE_LIMIT,
    pair_limit: int = PAIR_LIMIT,
    cores: int = 1,
) -> ConceptLattice:
    """Fixed points of ``φ↓φ↑`` on ``L1^X``, paired with their ``φ↑``-images."""
    return _pipeline(f, ctx, "formal", strategy, limit, brute_limit, pair_limit, cores)


def property_oriented_lattice(
    f: MultiAdjointFrame,
    ctx: Context,
    strategy: str = "both",
    limit: int = DEFAULT_LIMIT,
    brute_limit: int = BRUTE_LIMIT,
    pair_limit: int = PAIR_LIMIT,
    cores: int = 1,
) -> ConceptLattice:
    """Fixed points of ``φ_*φ*`` on ``L2^Y``, paired with their ``φ*``-images."""
    return _pipeline(
        f, ctx, "property", strategy, limit, brute_limit, pair_limit, cores
    )


def object_oriented_lattice(
    f: MultiAdjointFrame,
    ctx: Context,
    strategy: str = "both",
    limit: int = DEFAULT_LIMIT,
    brute_limit: int = BRUTE_LIMIT,
    pair_limit: int = PAIR_LIMIT,
    cores: int = 1,
) -> ConceptLattice:
    """Fixed points of ``φ†φ_†`` on ``L2^Y`` (reversed order), paired with their
    ``φ_†``-images."""
    return _pipeline(f, ctx, "object", strategy, limit, brute_limit, pair_limit, cores)


def compute(f: MultiAdjointFrame, ctx: Context, **kwargs) -> ConceptLattice:
    """Dispatches on the frame mode."""
    pipelines = {
        "formal": concept_lattice,
        "property": property_oriented_lattice,
        "object": object_oriented_lattice,
    }
    return pipelines[f.mode](f, ctx, **kwargs)


def compare(a: ConceptLattice, b: ConceptLattice) -> tuple[bool, str]:
    """Whether two lattices have the same concepts and the same order.

    Returns:
        ``(equal, report)``; the report names the first differences.
    """
    lines = []
    if len(a) != len(b):
        lines.append(f"concept count {len(a)} != {len(b)}")
    in_a, in_b = set(a.concepts), set(b.concepts)
    missing = [c for c in a.concepts if c not in in_b]
    extra = [c for c in b.concepts if c not in in_a]
    if missing:
        lines.append(f"{len(missing)} concepts only in the first, e.g. {missing[0]}")
    if extra:
        lines.append(f"{len(extra)} concepts only in the second, e.g. {extra[0]}")
    if not lines:
        position = {c: i for i, c in enumerate(b.concepts)}
        perm = [position[c] for c in a.concepts]
        relabelled = b.order[np.ix_(perm, perm)]
        bad = np.argwhere(relabelled != a.order)
        if bad.size:
            i, j = bad[0]
            lines.append(f"order differs between {a.concepts[i]} and {a.concepts[j]}")
    if not lines:
        return True, f"{len(a)} concepts, identical"
    return False, "; ".join(lines)
