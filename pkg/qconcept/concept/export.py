"""JSON and DOT output for concept lattices."""
import logging

import numpy as np

from qconcept.concept.engine import ConceptLattice
from qconcept.util.errors import ParseError

logger = logging.getLogger(__name__)


def to_json(cl: ConceptLattice) -> dict:
    return {
        "mode": cl.mode,
        "fibre": cl.q,
        "count": len(cl),
        "fixed_labels": list(cl.fixed_labels),
        "partner_labels": list(cl.partner_labels),
        "concepts": [
            {"fixed": list(fixed), "partner": list(partner)}
            for fixed, partner in cl.concepts
        ],
        "order": cl.order.astype(bool).tolist(),
    }


def from_json(data: dict) -> ConceptLattice:
    """Reads the object written by `to_json`."""
    keys = ("mode", "fibre", "fixed_labels", "partner_labels", "concepts", "order")
    missing = [k for k in keys if k not in data]
    if missing:
        raise ParseError(f"concept lattice missing keys {missing}")
    concepts = tuple(
        (tuple(c["fixed"]), tuple(c["partner"])) for c in data["concepts"]
    )
    n = len(concepts)
    order = np.array(data["order"], dtype=bool).reshape(n, n)
    return ConceptLattice(
        data["mode"],
        data["fibre"],
        tuple(data["fixed_labels"]),
        tuple(data["partner_labels"]),
        concepts,
        order,
    )


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(cl: ConceptLattice, name: str = "concepts") -> str:
    """The Hasse diagram as a DOT digraph, edges pointing upwards.

    Nodes are labelled ``⟨fixed | partner⟩`` with full vectors.
    """
    graph = cl.hasse()
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for i in range(len(cl)):
        lines.append(f"  c{i} [label={_quote(cl.label(i))}];")
    for i, j in sorted(graph.edges):
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    logger.debug(f"{len(cl)} nodes, {graph.number_of_edges()} edges")
    return "\n".join(lines) + "\n"
