import itertools
import unittest

from qconcept.algebra import construct, quantaloid, triple
from qconcept.lattice import examples
from qconcept.util.errors import FrameMismatch, NotJoinPreserving, ValidationError


class Test_Construct(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.c2 = examples.chain(2)
        cls.c3 = examples.chain(["0", "h", "1"])
        cls.godel = triple.godel(cls.c3)
        cls.luk = triple.lukasiewicz(cls.c3)
        cls.crisp = triple.meet(cls.c2, "crisp")

    def test_Qw(self):
        Q = quantaloid.validate_quantaloid(construct.build_Qw(self.godel))
        self.assertEqual(Q.objects, ("-1", "0", "1"))
        self.assertEqual(Q.name, "Q_⊗(godel)")
        self.assertEqual(Q.hom("-1", "1"), self.c3)
        self.assertEqual(len(Q.hom("1", "-1")), 1)
        self.assertEqual(Q.hom("0", "0").elements, ("bot", "id"))
        self.assertEqual(Q.compose("-1", "0", "1", "h", "1"), "h")
        self.assertEqual(Q.ldd("-1", "0", "1", "h", "1"), "h")
        self.assertIsNone(quantaloid.residuation_witness(Q))
        self.assertTrue(quantaloid.is_nontrivial(Q))

    def test_implications_match_triple(self):
        """Implications on the designated triple are the triple's residuals."""
        t = self.luk
        Q = construct.build_Qw(t)
        for x, y, z in itertools.product(self.c3, repeat=3):
            self.assertEqual(Q.compose("-1", "0", "1", y, x), t.conj(x, y))
            self.assertEqual(Q.ldd("-1", "0", "1", z, x), t.lua(z, x))
            self.assertEqual(Q.rdd("-1", "0", "1", y, z), t.lda(z, y))
        self.assertEqual(Q.rdd("-1", "0", "1", "h", "0"), "h")

    def test_single_triple_QF_is_Qw(self):
        QF = quantaloid.quantaloid_to_json(construct.build_QF([self.godel]))
        Qw = quantaloid.quantaloid_to_json(construct.build_Qw(self.godel))
        QF.pop("name")
        Qw.pop("name")
        self.assertEqual(QF, Qw)

    def test_QF_two_triples(self):
        Q = quantaloid.validate_quantaloid(construct.build_QF([self.godel, self.luk]))
        self.assertEqual(Q.objects, ("-1", "0", "1", "2"))
        self.assertEqual(len(Q.hom("1", "2")), 1)
        self.assertEqual(Q.ldd("-1", "0", "1", "0", "h"), "0")
        self.assertEqual(Q.ldd("-1", "0", "2", "0", "h"), "h")
        self.assertEqual(Q.compose("-1", "1", "1", "id", "h"), "h")
        self.assertEqual(Q.compose("0", "1", "1", "bot", "h"), "0")
        self.assertIsNone(quantaloid.residuation_witness(Q))

    def test_QP(self):
        Q = quantaloid.validate_quantaloid(construct.build_QP([self.godel]))
        self.assertEqual(Q.objects, ("0", "1", "inf"))
        self.assertEqual(Q.compose("0", "1", "inf", "1", "h"), "h")
        self.assertEqual(len(Q.hom("inf", "0")), 1)
        two = quantaloid.validate_quantaloid(construct.build_QP([self.godel, self.luk]))
        self.assertEqual(two.objects, ("0", "1", "2", "inf"))

    def test_QO(self):
        b2 = examples.boolean(["a", "b"])
        Q = quantaloid.validate_quantaloid(construct.build_QO([triple.meet(b2)]))
        self.assertEqual(Q.objects, ("-1", "0", "1"))
        self.assertEqual(Q.compose("-1", "0", "1", "b", "ab"), "b")
        self.assertEqual(Q.ldd("-1", "0", "1", "a", "ab"), "a")
        self.assertTrue(quantaloid.is_nontrivial(Q))

    def test_check_frame(self):
        with self.assertRaises(FrameMismatch):
            construct.check_frame([])
        with self.assertRaises(FrameMismatch) as e:
            construct.build_QF([self.godel, self.crisp])
        self.assertEqual(e.exception.witness, (2, "left"))
        lattices = construct.check_frame([self.godel, self.luk])
        self.assertEqual(lattices, self.godel.lattices())

    def test_forced_mutations_rejected(self):
        Q = construct.build_Qw(self.crisp)
        count = 0
        for change, mutant in quantaloid.mutations(Q):
            count += 1
            with self.assertRaises(ValidationError, msg=str(change)):
                quantaloid.validate_quantaloid(mutant)
        self.assertGreater(count, 0)

    def test_designated_mutations(self):
        data = quantaloid.quantaloid_to_json(construct.build_Qw(self.godel))
        data["composition"]["-1,0,1"][2][2] = "0"
        with self.assertRaises(NotJoinPreserving):
            quantaloid.validate_quantaloid(data)
        data["composition"]["-1,0,1"][2][2] = "1"
        data["composition"]["-1,0,1"][1][1] = "0"
        Q = quantaloid.validate_quantaloid(data)
        expected = quantaloid.quantaloid_to_json(construct.build_Qw(self.luk))
        composition = quantaloid.quantaloid_to_json(Q)["composition"]
        self.assertEqual(composition, expected["composition"])


if __name__ == "__main__":
    unittest.main()
