"""Multi-adjoint frames and contexts, and their quantaloid translations.

A frame fixes lattices ``L1, L2, P`` and ``n`` adjoint triples. The mode decides
which roles the lattices play in each triple and which quantaloid is built:

==========  ===============  ==========  ==============  ===========
mode        triple roles     quantaloid  attribute type  fibre
==========  ===============  ==========  ==============  ===========
formal      ``(L1, L2, P)``  ``Q_F``     ``-1``          ``0``
property    ``(P, L2, L1)``  ``Q_P``     ``0``           ``inf``
object      ``(L1, P, L2)``  ``Q_O``     ``0``           ``-1``
==========  ===============  ==========  ==============  ===========

Objects of a context are typed ``1..n``; their type picks the triple.
"""
import logging
from dataclasses import dataclass

from qconcept.algebra.construct import build_QF, build_QO, build_QP
from qconcept.algebra.quantaloid import FiniteQuantaloid
from qconcept.algebra.triple import AdjointTriple, validate_triple
from qconcept.lattice import examples
from qconcept.lattice.lattice import FiniteLattice, validate_lattice
from qconcept.qrel.relation import QRelation, TypedSet
from qconcept.util import io
from qconcept.util.errors import FrameMismatch, ParseError, TypeOutOfRange

logger = logging.getLogger(__name__)

MODES = ("formal", "property", "object")
ALIASES = {"property_oriented": "property", "object_oriented": "object"}
ROLES = {
    "formal": ("L1", "L2", "P"),
    "property": ("P", "L2", "L1"),
    "object": ("L1", "P", "L2"),
}
ATTRIBUTE_TYPE = {"formal": "-1", "property": "0", "object": "0"}
FIBRE = {"formal": "0", "property": "inf", "object": "-1"}
ADJUNCTION = {"formal": "isbell", "property": "kan", "object": "dual_kan"}


@dataclass(frozen=True)
class MultiAdjointFrame:
    """Lattices ``L1, L2, P`` with ``n ≥ 1`` adjoint triples in mode roles."""

    mode: str
    L1: FiniteLattice
    L2: FiniteLattice
    P: FiniteLattice
    triples: tuple
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.triples)

    def triple(self, index: int) -> AdjointTriple:
        """The triple ``⊗_index`` (``index`` in ``1..n``)."""
        return self.triples[index - 1]


@dataclass(frozen=True)
class Context:
    """``φ : X ⇸ Y`` with P-values and object types ``|y| ∈ {1..n}``.

    Attributes:
        attributes: ``X``, the row labels of `phi`.
        objects: ``Y``, the column labels of `phi`.
        types: ``types[j]`` is the type of ``objects[j]``.
        phi: Rows of P-element names.
    """

    attributes: tuple
    objects: tuple
    types: tuple
    phi: tuple


def normalize_mode(mode: str) -> str:
    if not isinstance(mode, str):
        raise ParseError(f"mode must be a string, got {mode!r}")
    mode = ALIASES.get(mode, mode)
    if mode not in MODES:
        raise ParseError(f"unknown mode {mode!r} (expected one of {MODES})")
    return mode


def parse_lattice(raw, name: str) -> FiniteLattice:
    """Reads a lattice declaration.

    Notes:
        Besides ``{"elements", "leq"}`` the shorthands ``{"chain": 3}``,
        ``{"chain": ["0", "h", "1"]}`` and ``{"boolean": 2}`` are accepted.
    """
    if isinstance(raw, dict) and "chain" in raw:
        return examples.chain(raw["chain"], name)
    if isinstance(raw, dict) and "boolean" in raw:
        return examples.boolean(raw["boolean"], name)
    return validate_lattice(raw, name)


def parse_lattices(data: dict) -> dict:
    """Returns ``{"L1": .., "L2": .., "P": ..}`` from a frame object."""
    missing = [k for k in ("L1", "L2", "P") if k not in data]
    if missing:
        raise ParseError(f"frame missing lattices {missing}")
    return {k: parse_lattice(data[k], k) for k in ("L1", "L2", "P")}


def build_frame(
    mode: str, lattices: dict, conjunctions: list, name: str = ""
) -> MultiAdjointFrame:
    """Validates each conjunction against the roles of `mode`.

    Raises:
        FrameMismatch: No triples.
        NotJoinPreserving: A conjunction fails to preserve joins.
    """
    mode = normalize_mode(mode)
    if not conjunctions:
        raise FrameMismatch("a frame needs at least one adjoint triple")
    left, right, value = (lattices[r] for r in ROLES[mode])
    triples = tuple(
        validate_triple(c, left, right, value, f"⊗_{i}")
        for i, c in enumerate(conjunctions, start=1)
    )
    logger.debug(f"{mode} frame - {len(triples)} triples")
    return MultiAdjointFrame(
        mode, lattices["L1"], lattices["L2"], lattices["P"], triples, name
    )


def frame_conjunctions(data: dict) -> list:
    triples = data.get("triples")
    if not isinstance(triples, list):
        raise ParseError("frame needs a list of triples")
    conjunctions = []
    for i, t in enumerate(triples, start=1):
        if not isinstance(t, dict) or "conjunction" not in t:
            raise ParseError(f"triple {i} needs a conjunction")
        conjunctions.append(t["conjunction"])
    return conjunctions


def frame_from_json(data: dict, mode: str | None = None) -> MultiAdjointFrame:
    """Builds a frame from its JSON object; `mode` overrides the declared mode."""
    if not isinstance(data, dict):
        raise ParseError("frame must be a JSON object")
    mode = mode or data.get("mode")
    if mode is None:
        raise ParseError("frame declares no mode")
    return build_frame(
        mode, parse_lattices(data), frame_conjunctions(data), data.get("name", "")
    )


def load_frame(file, mode: str | None = None) -> MultiAdjointFrame:
    return frame_from_json(io.load_json(file), mode)


def context_from_json(data: dict, frame: MultiAdjointFrame) -> Context:
    """Builds a context, checking every cell against ``P``.

    Notes:
        Objects are ``{"name", "type"}`` objects or bare names (type 1).

    Raises:
        ParseError: Missing keys, wrong shape, or a cell naming no element of P.
    """
    if not isinstance(data, dict):
        raise ParseError("context must be a JSON object")
    missing = [k for k in ("attributes", "objects", "phi") if k not in data]
    if missing:
        raise ParseError(f"context missing keys {missing}")
    for key in ("attributes", "objects", "phi"):
        if not isinstance(data[key], list):
            raise ParseError(f"context {key} must be a list")
    attributes = tuple(str(x) for x in data["attributes"])
    objects, types = [], []
    for obj in data["objects"]:
        if isinstance(obj, dict):
            if "name" not in obj:
                raise ParseError(f"context object {obj} has no name")
            objects.append(str(obj["name"]))
            t = obj.get("type", 1)
            if isinstance(t, bool) or not isinstance(t, int):
                raise ParseError(f"object {obj['name']} has a non-integer type {t!r}")
            types.append(t)
        else:
            objects.append(str(obj))
            types.append(1)
    rows = data["phi"]
    if len(rows) != len(attributes):
        raise ParseError(f"context phi needs {len(attributes)} rows")
    phi = []
    for x, row in zip(attributes, rows):
        if not isinstance(row, list) or len(row) != len(objects):
            raise ParseError(f"context phi row {x} needs {len(objects)} cells")
        phi.append(
            tuple(
                frame.P.check_element(str(v), f"in context cell phi[{x}][{y}]")
                for y, v in zip(objects, row)
            )
        )
    return Context(attributes, tuple(objects), tuple(types), tuple(phi))


def load_context(file, frame: MultiAdjointFrame) -> Context:
    return context_from_json(io.load_json(file), frame)


def frame_to_quantaloid(f: MultiAdjointFrame) -> FiniteQuantaloid:
    """``Q_F``, ``Q_P`` or ``Q_O`` according to the frame mode."""
    build = {"formal": build_QF, "property": build_QP, "object": build_QO}[f.mode]
    return build(list(f.triples))


def context_to_qrelation(
    f: MultiAdjointFrame, ctx: Context, Q: FiniteQuantaloid | None = None
) -> QRelation:
    """The context as a Q-relation over the frame's quantaloid.

    Raises:
        TypeOutOfRange: An object type lies outside ``1..n``.
    """
    for y, t in zip(ctx.objects, ctx.types):
        if not 1 <= t <= f.n:
            raise TypeOutOfRange(f"object {y} has type {t}, expected 1..{f.n}", (y, t))
    Q = Q or frame_to_quantaloid(f)
    X = TypedSet.uniform(ctx.attributes, ATTRIBUTE_TYPE[f.mode])
    Y = TypedSet(ctx.objects, tuple(str(t) for t in ctx.types))
    return QRelation(Q, X, Y, ctx.phi)
