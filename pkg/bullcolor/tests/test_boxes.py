#!/usr/bin/env python3

import unittest

from bullcolor import boxes
from bullcolor.boxes import BoxPartition, ODD, EVEN, CENTRAL, PERIPHERAL
from bullcolor.recognition import Hole
from bullcolor.errors import ClassViolation, InputError
from bullcolor.tests import samples

class TestSkeleton(unittest.TestCase):

	def testHoleOnly(self):
		sk = boxes.build_hole_skeleton(samples.C6, Hole(range(6)))
		self.assertEqual(sk.ell, 6)
		self.assertListEqual(sk.v_sets, [frozenset({i}) for i in range(6)])
		self.assertListEqual(sk.x_sets, [frozenset()] * 6)
		self.assertListEqual(sk.d_sets, sk.v_sets)
		self.assertEqual(sk.a1_star, frozenset())
		self.assertEqual(sk.z_set, frozenset())
		self.assertListEqual(sk.violations(samples.C6), [])

	def testPendantInZ(self):
		sk = boxes.build_hole_skeleton(samples.C6_PENDANT, Hole(range(6)))
		self.assertEqual(sk.z_set, frozenset({6}))
		self.assertEqual(sk.z2_star, frozenset({6}))
		self.assertEqual(sk.z1_star, frozenset())

	def testBlowupFillsV(self):
		# vertex 6 is a true twin of 0
		g = samples.with_vertex(samples.C6, (0, 1, 5))
		sk = boxes.build_hole_skeleton(g, Hole(range(6)))
		self.assertEqual(sk.v_sets[0], frozenset({0, 6}))

	def testSideSeer(self):
		# vertex 6 sees the whole even side and nothing else
		g = samples.with_vertex(samples.C6, (1, 3, 5))
		sk = boxes.build_hole_skeleton(g, Hole(range(6)))
		self.assertEqual(sk.a1_star, frozenset({6}))

	def testNotAHole(self):
		with self.assertRaises(InputError):
			boxes.build_hole_skeleton(samples.C5, Hole(range(5)))
		with self.assertRaises(InputError):
			boxes.build_hole_skeleton(samples.C6, Hole((0, 1, 2, 3, 5, 4)))

	def testLevels(self):
		g = samples.C6_PENDANT
		sk = boxes.build_hole_skeleton(g, Hole(range(6)))
		self.assertListEqual(boxes.build_levels(g, sk), [
			frozenset({0, 2, 4}), frozenset({1, 3, 5, 6})
		])

class BaseBoxPartitionTest(unittest.TestCase):
	"""Build a box partition and compare it with the expected boxes."""

	g = samples.C6
	expected = (
		({0}, ODD, CENTRAL, 1), ({2}, ODD, CENTRAL, 1), ({4}, ODD, CENTRAL, 1),
		({1}, EVEN, CENTRAL, 2), ({3}, EVEN, CENTRAL, 2), ({5}, EVEN, CENTRAL, 2),
	)

	def setUp(self):
		self.bp = boxes.build_box_partition(self.g)

	def testBoxes(self):
		self.assertEqual(len(self.bp), len(self.expected))
		for box, (members, label, kind, level) in zip(self.bp, self.expected):
			self.assertEqual(box.members, frozenset(members))
			self.assertEqual(box.label, label)
			self.assertEqual(box.kind, kind)
			self.assertEqual(box.level, level)

	def testIds(self):
		self.assertListEqual([b.id for b in self.bp], list(range(len(self.expected))))

	def testValid(self):
		self.assertListEqual(boxes.validate_box_partition(self.g, self.bp), [])

	def testBoxOf(self):
		for box in self.bp:
			for v in box.members:
				self.assertIs(self.bp.box_of(v), box)

	def testCentralAux(self):
		for box in self.bp.central:
			self.assertEqual(len(box.aux), 4)
			a, b, c, d = box.aux
			self.assertTrue(self.g.has_edge(a, b))
			self.assertTrue(self.g.has_edge(c, d))

class TestHolePartition(BaseBoxPartitionTest):

	def testFirstAux(self):
		self.assertTupleEqual(self.bp.boxes[0].aux, (5, 4, 1, 2))

class TestPendantPartition(BaseBoxPartitionTest):
	g = samples.C6_PENDANT
	expected = BaseBoxPartitionTest.expected + (({6}, EVEN, PERIPHERAL, 2),)

	def testPeripheralAux(self):
		self.assertTupleEqual(self.bp.boxes[6].aux, (0, 1))
		self.assertListEqual(self.bp.peripheral, [self.bp.boxes[6]])

class TestEightHolePartition(BaseBoxPartitionTest):
	g = samples.cycle(8)
	expected = tuple(({v}, ODD, CENTRAL, 1) for v in (0, 2, 4, 6)) + \
		tuple(({v}, EVEN, CENTRAL, 2) for v in (1, 3, 5, 7))

class TestBoxPartitionErrors(unittest.TestCase):

	def testNoEvenHole(self):
		with self.assertRaises(ClassViolation):
			boxes.build_box_partition(samples.BULL)

	def testUnknownVertex(self):
		bp = boxes.build_box_partition(samples.C6)
		with self.assertRaises(InputError):
			bp.box_of(9)

class TestValidation(unittest.TestCase):
	"""Break a good partition one property at a time."""

	def setUp(self):
		self.g = samples.C6_PENDANT
		self.boxes = list(boxes.build_box_partition(self.g))

	def violations(self):
		return boxes.validate_box_partition(self.g, BoxPartition(self.g.n, self.boxes))

	def properties(self):
		return {v.property for v in self.violations()}

	def testSameLabel(self):
		self.boxes[3] = self.boxes[3]._replace(label=ODD)
		self.assertIn('same-label edge', self.properties())

	def testMissingVertex(self):
		del self.boxes[6]
		bad = [v for v in self.violations() if v.property == 'partition']
		self.assertEqual(len(bad), 1)
		self.assertEqual(bad[0].witness, frozenset({6}))

	def testDisconnectedBox(self):
		# {1, 3} is one box but not connected
		b1, b3 = self.boxes[3], self.boxes[4]
		self.boxes[3] = b1._replace(members=b1.members | b3.members)
		del self.boxes[4]
		self.boxes = [b._replace(id=i) for i, b in enumerate(self.boxes)]
		self.assertIn('connected', self.properties())

	def testTooFewCentral(self):
		self.boxes = [b._replace(kind=PERIPHERAL, aux=(0, 1)) if b.level == 2 else b for b in self.boxes]
		self.assertIn('six central', self.properties())

	def testBadPeripheralAux(self):
		self.boxes[6] = self.boxes[6]._replace(aux=(2, 3))
		self.assertIn('peripheral aux', self.properties())

	def testBadCentralAux(self):
		self.boxes[0] = self.boxes[0]._replace(aux=(5, 1, 4, 2))
		bad = [v for v in self.violations() if v.property == 'central aux']
		self.assertEqual(len(bad), 1)
		self.assertEqual(bad[0].box, 0)

	def testPropertyKeys(self):
		self.assertIn('partial P4', boxes.PROPERTIES)
		for v in self.violations():
			self.assertIn(v.property, boxes.PROPERTIES)

if __name__ == '__main__':
	unittest.main()
