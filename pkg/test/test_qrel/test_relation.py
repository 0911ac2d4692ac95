import itertools
import unittest

from qconcept.algebra import construct, triple
from qconcept.algebra.quantaloid import build_quantale
from qconcept.lattice import examples
from qconcept.qrel.relation import (
    QRelation,
    TypedSet,
    compose_rel,
    identity_rel,
    ldd_rel,
    leq_rel,
    rdd_rel,
)
from qconcept.util.errors import ShapeMismatch, TypeMismatch


class Test_TypedSet(unittest.TestCase):
    def test_types(self):
        X = TypedSet(("a", "b", "c"), (-1, 1, float("inf")))
        self.assertEqual(X.types, ("-1", "1", "inf"))
        self.assertEqual(X.type_of("b"), "1")
        self.assertEqual(X.fibre("-1"), ("a",))
        self.assertEqual(TypedSet.uniform(["x", "y"], "0").types, ("0", "0"))

    def test_errors(self):
        with self.assertRaises(ShapeMismatch):
            TypedSet(("a", "a"), ("*", "*"))
        with self.assertRaises(ShapeMismatch):
            TypedSet(("a",), ("*", "*"))
        Q = build_quantale(examples.chain(2), examples.chain(2).meet2, "1")
        with self.assertRaises(TypeMismatch):
            TypedSet.uniform(["a"], "0").check(Q)


class Test_Relation(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        c3 = examples.chain(["0", "h", "1"])
        cls.Q = build_quantale(c3, c3.meet2, "1", "godel")
        cls.X = TypedSet.uniform(["x1", "x2"], "*")
        cls.Y = TypedSet.uniform(["y"], "*")
        cls.Z = TypedSet.uniform(["z"], "*")

    def relations(self, source, target):
        cells = len(source) * len(target)
        for values in itertools.product(("0", "h", "1"), repeat=cells):
            rows = [values[i : i + len(target)] for i in range(0, cells, len(target))]
            yield QRelation(self.Q, source, target, tuple(rows))

    def test_values(self):
        phi = QRelation(self.Q, self.X, self.Y, (("h",), ("1",)))
        self.assertEqual(phi("x2", "y"), "1")
        self.assertEqual(list(phi.items())[0], ("x1", "*", "y", "*", "h"))
        with self.assertRaises(ShapeMismatch):
            QRelation(self.Q, self.X, self.Y, (("h",),))
        with self.assertRaises(TypeMismatch):
            QRelation(self.Q, self.X, self.Y, (("h",), ("q",)))

    def test_compose(self):
        phi = QRelation(self.Q, self.X, self.Y, (("h",), ("1",)))
        psi = QRelation(self.Q, self.Y, self.Z, (("h",),))
        self.assertEqual(compose_rel(psi, phi).values, (("h",), ("h",)))
        with self.assertRaises(TypeMismatch):
            compose_rel(phi, psi)

    def test_identity_is_unit(self):
        for phi in self.relations(self.X, self.Y):
            self.assertEqual(compose_rel(phi, identity_rel(self.Q, self.X)), phi)
            self.assertEqual(compose_rel(identity_rel(self.Q, self.Y), phi), phi)

    def test_implications(self):
        """ψ ∘ φ ≤ ξ iff ψ ≤ ξ ↙ φ iff φ ≤ ψ ↘ ξ."""
        for phi, xi in itertools.product(
            self.relations(self.X, self.Y), self.relations(self.X, self.Z)
        ):
            left = ldd_rel(xi, phi)
            for psi in self.relations(self.Y, self.Z):
                a = leq_rel(compose_rel(psi, phi), xi)
                self.assertEqual(a, leq_rel(psi, left))
                self.assertEqual(a, leq_rel(phi, rdd_rel(psi, xi)))

    def test_typed_implications(self):
        """Implications on a multi-object quantaloid land in the right homs."""
        Q = construct.build_QF([triple.godel(examples.chain(["0", "h", "1"]))])
        A = TypedSet(("a",), ("-1",))
        B = TypedSet(("b1", "b2"), ("1", "1"))
        phi = QRelation(Q, A, B, (("h", "1"),))
        mu = QRelation(Q, A, TypedSet(("*",), ("0",)), (("1",),))
        up = ldd_rel(phi, mu)
        self.assertEqual(up.source.types, ("0",))
        self.assertEqual(up.values, (("h", "1"),))
        down = rdd_rel(up, phi)
        self.assertEqual(down.values, (("1",),))


if __name__ == "__main__":
    unittest.main()
