import pathlib
import random
import unittest
from unittest import mock

from qconcept.concept import adjunction, frame
from qconcept.concept.frame import Context
from qconcept.lattice import examples
from qconcept.lattice.order import FixedPointSet
from qconcept.qrel.category import Copresheaf, Presheaf
from qconcept.util.errors import ParseError, StrategyMismatch, TypeMismatch

FIXTURES = pathlib.Path(__file__).parents[1] / "fixtures"
IDENTITY = [["1", "0"], ["0", "1"]]


def load(name: str) -> frame.MultiAdjointFrame:
    return frame.load_frame(FIXTURES / f"frame-{name}.json")


def random_context(rng: random.Random, f, n_x: int, n_y: int) -> Context:
    """A context with random cells and random object types."""
    return Context(
        tuple(f"x{i}" for i in range(1, n_x + 1)),
        tuple(f"y{j}" for j in range(1, n_y + 1)),
        tuple(rng.randint(1, f.n) for _ in range(n_y)),
        tuple(
            tuple(rng.choice(f.P.elements) for _ in range(n_y)) for _ in range(n_x)
        ),
    )


def relation(f, attributes, objects, phi, types=None):
    types = types or (1,) * len(objects)
    phi = tuple(map(tuple, phi))
    ctx = Context(tuple(attributes), tuple(objects), tuple(types), phi)
    return frame.context_to_qrelation(f, ctx)


class Test_Adjunction(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.frames = {
            name: load(name)
            for name in (
                "crisp-formal",
                "crisp-property",
                "crisp-object",
                "mixed-formal",
                "mixed-property",
                "mixed-object",
                "hetero-formal",
                "hetero-property",
                "hetero-object",
            )
        }

    def test_random_contexts(self):
        """Each fibre restriction is a Galois connection; strategies agree."""
        rng = random.Random(7)
        for name, f in self.frames.items():
            for _ in range(6):
                ctx = random_context(rng, f, rng.randint(1, 3), rng.randint(1, 3))
                phi = frame.context_to_qrelation(f, ctx)
                kind, q = frame.ADJUNCTION[f.mode], frame.FIBRE[f.mode]
                adj = adjunction.fibre_adjunction(kind, phi, q)
                adj.closure().validate()
                brute = adjunction.fixed_point_set(adj, "brute")
                fixed = adjunction.fixed_point_set(adj, "generators")
                self.assertEqual(brute, fixed, msg=f"{name} {ctx}")
                self.assertTrue(fixed.is_meet_closed())
                self.assertEqual(adjunction.fixed_point_set(adj), fixed)

    def test_isbell_identity(self):
        f = self.frames["crisp-formal"]
        phi = relation(f, ["x1", "x2"], ["y1", "y2"], IDENTITY)
        mu = Presheaf(phi.source, "0", ("1", "0"))
        lam = adjunction.isbell_up(phi, mu)
        self.assertEqual(lam.values, ("1", "0"))
        self.assertEqual(adjunction.isbell_down(phi, lam), mu)
        adj = adjunction.fibre_adjunction("isbell", phi, "0")
        self.assertEqual(len(adjunction.fixed_point_set(adj)), 4)
        self.assertEqual(adj.provenance, "isbell@0")

    def test_godel_fixed_points(self):
        phi = relation(load("godel-formal"), ["x"], ["y"], [["h"]])
        adj = adjunction.fibre_adjunction("isbell", phi, "0")
        self.assertEqual(adjunction.fixed_point_set(adj).points, (("h",), ("1",)))
        self.assertEqual(adj.left(("1",)), ("h",))

    def test_kan_star_lukasiewicz(self):
        f = frame.build_frame(
            "property",
            {k: examples.chain(3) for k in ("L1", "L2", "P")},
            ["lukasiewicz"],
        )
        phi = relation(f, ["x"], ["y"], [["h"]])
        self.assertEqual(phi.quantaloid.name, "Q_P")
        out = adjunction.kan_star(phi, Presheaf(phi.target, "inf", ("h",)))
        self.assertEqual(out, Presheaf(phi.source, "inf", ("0",)))
        back = adjunction.kan_lower(phi, Presheaf(phi.source, "inf", ("0",)))
        self.assertEqual(back.values, ("h",))

    def test_property_bottom_context(self):
        f = self.frames["mixed-property"]
        bottom = [["0", "0"], ["0", "0"]]
        phi = relation(f, ["x1", "x2"], ["y1", "y2"], bottom, (1, 2))
        adj = adjunction.fibre_adjunction("kan", phi, "inf")
        fixed = adjunction.fixed_point_set(adj)
        self.assertEqual(fixed.points, (("1", "1"),))

    def test_dual_kan_identity(self):
        f = self.frames["crisp-object"]
        phi = relation(f, ["x1", "x2"], ["y1", "y2"], IDENTITY)
        lam = Copresheaf(phi.target, "-1", ("1", "0"))
        lower = adjunction.dual_kan_lower(phi, lam)
        self.assertEqual(lower.values, ("1", "0"))
        mu = Copresheaf(phi.source, "-1", ("0", "1"))
        upper = adjunction.dual_kan_upper(phi, mu)
        self.assertEqual(upper.values, ("0", "1"))
        adj = adjunction.fibre_adjunction("dual_kan", phi, "-1")
        self.assertEqual(adj.carrier.top, ("0", "0"))
        self.assertEqual(len(adjunction.fixed_point_set(adj)), 4)

    def test_empty_objects(self):
        """Without objects the isbell closure is constant and kan has one point."""
        formal = relation(self.frames["mixed-formal"], ["x1", "x2"], [], [[], []])
        adj = adjunction.fibre_adjunction("isbell", formal, "0")
        fixed = adjunction.fixed_point_set(adj)
        self.assertEqual(fixed.points, (("1", "1"),))
        prop = relation(self.frames["mixed-property"], ["x1"], [], [[]])
        adj = adjunction.fibre_adjunction("kan", prop, "inf")
        fixed = adjunction.fixed_point_set(adj)
        self.assertEqual(fixed.points, ((),))

    def test_type_checks(self):
        phi = relation(self.frames["crisp-formal"], ["x1"], ["y1"], [["1"]])
        with self.assertRaises(TypeMismatch):
            adjunction.isbell_up(phi, Presheaf(phi.target, "0", ("1",)))
        with self.assertRaises(TypeMismatch):
            adjunction.isbell_up(phi, Presheaf(phi.source, "0", ("h",)))
        with self.assertRaises(ParseError):
            adjunction.fibre_adjunction("isbel", phi, "0")
        adj = adjunction.fibre_adjunction("isbell", phi, "0")
        with self.assertRaises(ParseError):
            adjunction.fixed_point_set(adj, "fastest")

    def test_strategy_mismatch(self):
        phi = relation(self.frames["crisp-formal"], ["x1"], ["y1"], [["1"]])
        adj = adjunction.fibre_adjunction("isbell", phi, "0")
        wrong = FixedPointSet(adj.carrier, (("0",), ("1",)))
        patch = mock.patch.object(
            adjunction, "generator_fixed_points", return_value=wrong
        )
        with patch:
            with self.assertRaises(StrategyMismatch):
                adjunction.fixed_point_set(adj, "both")
            self.assertEqual(adjunction.fixed_point_set(adj, "generators"), wrong)

    def test_cross_check_skipped(self):
        f = self.frames["mixed-formal"]
        phi = relation(f, ["x1", "x2"], ["y1"], [["h"], ["1"]])
        adj = adjunction.fibre_adjunction("isbell", phi, "0")
        with self.assertLogs("qconcept.concept.adjunction", level="WARNING"):
            fixed = adjunction.fixed_point_set(adj, "both", brute_limit=4)
        self.assertEqual(fixed, adjunction.brute_fixed_points(adj))

    def test_brute_parallel(self):
        rng = random.Random(3)
        f = self.frames["mixed-formal"]
        phi = frame.context_to_qrelation(f, random_context(rng, f, 3, 2))
        adj = adjunction.fibre_adjunction("isbell", phi, "0")
        self.assertEqual(
            adjunction.brute_fixed_points(adj, cores=2),
            adjunction.brute_fixed_points(adj),
        )

    def test_meet_closure(self):
        c3 = examples.chain(["0", "h", "1"])
        self.assertEqual(adjunction.meet_closure(c3, ["0"]), {"0", "1"})
        b2 = examples.boolean(2)
        self.assertEqual(adjunction.meet_closure(b2, ["a", "b"]), {"0", "a", "b", "ab"})


if __name__ == "__main__":
    unittest.main()
