#!/usr/bin/env python3

import unittest

from bullcolor import generators
from bullcolor.generators import InstanceSpec, CLASS, SUBCLASS_B
from bullcolor.errors import InputError, GenerationError
from bullcolor.graph import Graph
from bullcolor.recognition import is_class_member, SPIKED_F1
from bullcolor.util import ProgramGlobals
from bullcolor.tests import samples

class TestSpecs(unittest.TestCase):

	def testCallForm(self):
		spec = generators.parse_spec('hole(6)', seed=3)
		self.assertEqual(spec, InstanceSpec('hole', {None : 6}, 3))
		self.assertEqual(generators.format_spec(spec), 'hole:6')

	def testKeywordForm(self):
		spec = generators.parse_spec('attach:hole=8,count=3,wmax=4')
		self.assertDictEqual(spec.params, {'hole' : 8, 'count' : 3, 'wmax' : 4})
		self.assertEqual(generators.format_spec(spec), 'attach:count=3,hole=8,wmax=4')

	def testMixed(self):
		spec = generators.parse_spec('spiked(F2, shuffle=1)')
		self.assertDictEqual(spec.params, {None : 'F2', 'shuffle' : 1})
		self.assertEqual(generators.format_spec(spec), 'spiked:F2,shuffle=1')

	def testBare(self):
		spec = generators.parse_spec('bull')
		self.assertDictEqual(spec.params, {})
		self.assertEqual(generators.format_spec(spec), 'bull')

	def testErrors(self):
		with self.assertRaises(InputError):
			generators.parse_spec('petersen')
		with self.assertRaises(InputError):
			generators.parse_spec('attach:hole=8,3')

class BaseGeneratorTest(unittest.TestCase):
	"""Generate from a spec and check the advertised class."""

	spec = 'hole(6)'
	n = 6
	advertised = SUBCLASS_B
	graph = samples.C6

	def setUp(self):
		self.inst = generators.generate(generators.parse_spec(self.spec, seed=1))

	def testSize(self):
		self.assertEqual(self.inst.graph.n, self.n)

	def testAdvertised(self):
		self.assertEqual(self.inst.meta['advertised'], self.advertised)
		if self.advertised is not None:
			self.assertTrue(is_class_member(self.inst.graph, strict=(self.advertised == SUBCLASS_B)))

	def testGraph(self):
		if self.graph is not None:
			self.assertEqual(self.inst.graph, self.graph)

	def testSeeded(self):
		again = generators.generate(generators.parse_spec(self.spec, seed=1))
		self.assertEqual(again.graph, self.inst.graph)

class TestHoleGenerator(BaseGeneratorTest):
	pass

class TestOddHoleGenerator(BaseGeneratorTest):
	spec = 'hole(5)'
	n = 5
	advertised = None
	graph = samples.C5

class TestBullGenerator(BaseGeneratorTest):
	spec = 'bull'
	n = 5
	graph = samples.BULL

class TestSensitiveGenerator(BaseGeneratorTest):
	spec = 'sensitive(hole=6)'
	n = 7
	advertised = CLASS
	graph = samples.C6_SENSITIVE

class TestWheelGenerator(BaseGeneratorTest):
	spec = 'wheel(6)'
	n = 7
	advertised = CLASS
	graph = None

class TestLockGenerator(BaseGeneratorTest):
	spec = 'lock'
	n = 6
	advertised = CLASS
	graph = None

class TestDoubleBroomGenerator(BaseGeneratorTest):
	spec = 'double-broom'
	n = 8
	advertised = CLASS
	graph = None

class TestSpikedF1Generator(BaseGeneratorTest):
	spec = 'spiked(F1)'
	n = 7
	advertised = CLASS
	graph = None

class TestSpikedF2Generator(BaseGeneratorTest):
	spec = 'spiked(F2)'
	n = 8
	advertised = CLASS
	graph = None

class TestBlowupGenerator(BaseGeneratorTest):
	spec = 'blowup:hole=6,size=1'
	n = 6
	advertised = CLASS
	graph = samples.C6

class TestAttachGenerator(BaseGeneratorTest):
	spec = 'attach:hole=8,count=3'
	n = 11
	advertised = CLASS
	graph = None

class TestPeripheralGenerator(BaseGeneratorTest):
	spec = 'peripheral:hole=6,depth=1,branch=1'
	n = 7
	graph = None

class TestOpenSensitiveGenerator(BaseGeneratorTest):
	spec = 'sensitive(closed=0)'
	n = 10
	advertised = CLASS
	graph = samples.P6_SENSITIVE

class TestSensitiveAttachedGenerator(BaseGeneratorTest):
	spec = 'sensitive:closed=0,count=2'
	n = 12
	advertised = CLASS
	graph = None

class TestSpikedAttachedGenerator(BaseGeneratorTest):
	spec = 'spiked:F2,count=2'
	n = 10
	advertised = CLASS
	graph = None

class TestPlantedRoles(unittest.TestCase):
	"""Extras keep the neighbourhood their role promises."""

	def instances(self, spec):
		for seed in range(8):
			try:
				yield generators.generate(generators.parse_spec(spec, seed))
			except GenerationError:
				continue

	def testSpiked(self):
		for inst in self.instances('spiked:F1,count=3'):
			g, core = inst.graph, inst.meta['planted'][:5]
			for i, role in enumerate(inst.meta['roles']):
				seen = tuple(u + 1 for u in core if g.has_edge(u, 7 + i))
				with self.subTest(seed=inst.spec.seed, role=role):
					if role == 't':
						self.assertEqual(seen, (1, 2, 3, 4, 5))
					elif role == 'z':
						self.assertEqual(seen, ())
					else:
						self.assertIn(seen, generators._PARTIAL_TYPES[SPIKED_F1])

	def testSensitive(self):
		expected = {'a' : {1, 9}, 'b' : {2, 9}, 'n' : {0, 1, 2}, 'm' : {0, 2}}
		for inst in self.instances('sensitive:closed=0,count=3'):
			g = inst.graph
			self.assertSetEqual(set(g.neighbors(9)) & set(range(10)), {1, 2})
			for i, role in enumerate(inst.meta['roles']):
				with self.subTest(seed=inst.spec.seed, role=role):
					self.assertSetEqual(set(g.neighbors(10 + i)) & set(range(10)), expected[role])

class TestOptions(unittest.TestCase):

	def testWeights(self):
		inst = generators.generate(generators.parse_spec('hole:8,wmax=3', seed=5))
		w = inst.meta['weights']
		self.assertEqual(len(w), 8)
		self.assertTrue(all(1 <= x <= 3 for x in w))

	def testShuffle(self):
		inst = generators.generate(generators.parse_spec('sensitive(shuffle=1)', seed=2))
		g = inst.graph
		self.assertEqual((g.n, g.m), (7, 8))
		self.assertListEqual(sorted(inst.meta['planted']), list(range(7)))
		# the planted vertex still sees exactly two hole vertices
		self.assertEqual(len(g.neighbors(inst.meta['planted'][0])), 2)

	def testBadParameters(self):
		for spec in ('hole(3)', 'hole:size=4', 'blowup:hole=7', 'spiked(F3)', 'bull(1)'):
			with self.subTest(spec=spec):
				with self.assertRaises(InputError):
					generators.generate(generators.parse_spec(spec))

class TestRetries(unittest.TestCase):

	def setUp(self):
		self.saved = ProgramGlobals['retry_budget']

		@generators.generator('always-odd')
		def always_odd(rng):
			return samples.C5, {'structure' : 'hole', 'advertised' : CLASS, 'random' : True}

	def tearDown(self):
		ProgramGlobals['retry_budget'] = self.saved
		del generators._generators['always-odd']

	def testGivesUp(self):
		ProgramGlobals['retry_budget'] = 3
		with self.assertRaises(GenerationError):
			generators.generate(InstanceSpec('always-odd', {}, 0))

if __name__ == '__main__':
	unittest.main()
