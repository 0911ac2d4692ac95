import itertools
import pathlib
import random
import unittest

import numpy as np

from qconcept.concept import engine, frame, oracle
from qconcept.concept.frame import Context
from qconcept.util.errors import FibreTooLarge, FrameMismatch

FIXTURES = pathlib.Path(__file__).parents[1] / "fixtures"
MODES = ("formal", "property", "object")


def load(name: str) -> frame.MultiAdjointFrame:
    return frame.load_frame(FIXTURES / f"frame-{name}.json")


def random_context(rng: random.Random, f, n_x: int, n_y: int) -> Context:
    return Context(
        tuple(f"x{i}" for i in range(1, n_x + 1)),
        tuple(f"y{j}" for j in range(1, n_y + 1)),
        tuple(rng.randint(1, f.n) for _ in range(n_y)),
        tuple(
            tuple(rng.choice(f.P.elements) for _ in range(n_y)) for _ in range(n_x)
        ),
    )


def subsets(items):
    return [
        frozenset(s)
        for k in range(len(items) + 1)
        for s in itertools.combinations(items, k)
    ]


def crisp_closed_sets(mode: str, ctx: Context) -> set:
    """Closed sets of a crisp context computed with plain set operations."""
    X, Y = ctx.attributes, ctx.objects
    incidence = {
        (x, y) for x, row in zip(X, ctx.phi) for y, v in zip(Y, row) if v == "1"
    }

    def common_objects(A):
        return frozenset(y for y in Y if all((x, y) in incidence for x in A))

    def common_attributes(B):
        return frozenset(x for x in X if all((x, y) in incidence for y in B))

    def possibility(B):
        return frozenset(x for x in X if any((x, y) in incidence for y in B))

    def necessity(A):
        return frozenset(
            y for y in Y if all(x in A for x in X if (x, y) in incidence)
        )

    def preimage(B):
        return frozenset(
            x for x in X if all(y in B for y in Y if (x, y) in incidence)
        )

    def image(A):
        return frozenset(y for y in Y if any((x, y) in incidence for x in A))

    if mode == "formal":
        return {A for A in subsets(X) if common_attributes(common_objects(A)) == A}
    if mode == "property":
        return {B for B in subsets(Y) if necessity(possibility(B)) == B}
    return {B for B in subsets(Y) if image(preimage(B)) == B}


def as_sets(cl: engine.ConceptLattice) -> set:
    return {
        frozenset(k for k, v in zip(cl.fixed_labels, fixed) if v == "1")
        for fixed, _ in cl.concepts
    }


def as_labelled(cl: engine.ConceptLattice) -> set:
    return {
        (
            frozenset(zip(cl.fixed_labels, fixed)),
            frozenset(zip(cl.partner_labels, partner)),
        )
        for fixed, partner in cl.concepts
    }


class Test_Engine(unittest.TestCase):
    def test_identity_context(self):
        for mode in MODES:
            f = load(f"crisp-{mode}")
            ctx = frame.load_context(FIXTURES / "context-identity.json", f)
            cl = engine.compute(f, ctx)
            self.assertEqual(len(cl), 4)
            self.assertEqual(cl.hasse().number_of_edges(), 4)
            self.assertEqual(cl.provenance, f"{mode}@{frame.FIBRE[mode]}")

    def test_godel_concepts(self):
        f = load("godel-formal")
        ctx = Context(("x",), ("y",), (1,), (("h",),))
        cl = engine.concept_lattice(f, ctx)
        self.assertEqual(cl.concepts, ((("h",), ("1",)), (("1",), ("h",))))
        self.assertEqual(cl.fixed_labels, ("x",))
        self.assertTrue(cl.order[0, 1])
        self.assertFalse(cl.order[1, 0])
        self.assertEqual(cl.label(0), "⟨(h) | (1)⟩")

    def test_matches_oracle(self):
        """The quantaloid pipeline agrees with the direct formulas."""
        rng = random.Random(11)
        kinds = ("crisp", "mixed", "hetero", "boolean")
        for name in [f"{kind}-{mode}" for kind in kinds for mode in MODES]:
            f = load(name)
            for _ in range(6):
                ctx = random_context(rng, f, rng.randint(0, 3), rng.randint(0, 3))
                expected = oracle.oracle_direct(f, ctx)
                same, report = engine.compare(engine.compute(f, ctx), expected)
                self.assertTrue(same, msg=f"{name} {ctx}: {report}")

    def test_boolean_lattices(self):
        X, Y = ("x1", "x2"), ("y1", "y2")
        builders = {
            "formal": (engine.concept_lattice, X, Y),
            "property": (engine.property_oriented_lattice, Y, X),
            "object": (engine.object_oriented_lattice, Y, X),
        }
        for mode, (build, fixed_labels, partner_labels) in builders.items():
            f = load(f"boolean-{mode}")
            ctx = frame.load_context(FIXTURES / "context-boolean.json", f)
            cl = build(f, ctx)
            self.assertEqual(cl, oracle.oracle_direct(f, ctx), msg=mode)
            self.assertEqual(cl.fixed_labels, fixed_labels)
            self.assertEqual(cl.partner_labels, partner_labels)

    def test_crisp_set_operators(self):
        """Crisp frames give the set-based closed sets of each mode."""
        rng = random.Random(5)
        for mode in MODES:
            f = load(f"crisp-{mode}")
            for _ in range(20):
                ctx = random_context(rng, f, rng.randint(1, 4), rng.randint(1, 4))
                cl = engine.compute(f, ctx)
                expected = crisp_closed_sets(mode, ctx)
                self.assertEqual(as_sets(cl), expected, msg=f"{mode} {ctx}")

    def test_permutation(self):
        """Relabelling attributes and objects permutes the concepts."""
        rng = random.Random(2)
        f = load("mixed-formal")
        ctx = random_context(rng, f, 3, 2)
        rows, cols = [2, 0, 1], [1, 0]
        permuted = Context(
            tuple(ctx.attributes[i] for i in rows),
            tuple(ctx.objects[j] for j in cols),
            tuple(ctx.types[j] for j in cols),
            tuple(tuple(ctx.phi[i][j] for j in cols) for i in rows),
        )
        a, b = engine.compute(f, ctx), engine.compute(f, permuted)
        self.assertEqual(len(a), len(b))
        self.assertEqual(as_labelled(a), as_labelled(b))

    def test_compare(self):
        f = load("crisp-formal")
        ctx = frame.load_context(FIXTURES / "context-identity.json", f)
        cl = engine.compute(f, ctx)
        self.assertEqual(engine.compare(cl, cl), (True, "4 concepts, identical"))
        head = (cl.mode, cl.q, cl.fixed_labels, cl.partner_labels)
        smaller = engine.ConceptLattice(*head, cl.concepts[:3], cl.order[:3, :3])
        same, report = engine.compare(cl, smaller)
        self.assertFalse(same)
        self.assertIn("concept count 4 != 3", report)
        self.assertIn("1 concepts only in the first", report)
        same, report = engine.compare(smaller, cl)
        self.assertIn("1 concepts only in the second", report)
        flipped = engine.ConceptLattice(*head, cl.concepts, np.eye(4, dtype=bool))
        same, report = engine.compare(cl, flipped)
        self.assertFalse(same)
        self.assertIn("order differs", report)
        self.assertNotEqual(cl, flipped)

    def test_to_frame(self):
        f = load("mixed-formal")
        ctx = frame.load_context(FIXTURES / "context-mixed.json", f)
        df = engine.compute(f, ctx).to_frame()
        self.assertEqual(
            list(df.columns), ["fixed:x1", "fixed:x2", "partner:y1", "partner:y2"]
        )
        self.assertEqual(df.iloc[-1]["fixed:x1"], "1")

    def test_errors(self):
        f = load("crisp-property")
        ctx = frame.load_context(FIXTURES / "context-identity.json", f)
        with self.assertRaises(FrameMismatch):
            engine.concept_lattice(f, ctx)
        with self.assertRaises(FibreTooLarge):
            engine.compute(f, ctx, limit=3)


if __name__ == "__main__":
    unittest.main()
