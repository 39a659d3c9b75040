#!/usr/bin/env python3

import unittest

from bullcolor import graph
from bullcolor.graph import Graph
from bullcolor.errors import InputError
from bullcolor.util import ProgramGlobals
from bullcolor.tests import samples

class TestBitsets(unittest.TestCase):

	def testBitsAscending(self):
		self.assertListEqual(list(graph.bits(0b101001)), [0, 3, 5])

	def testEmptyMask(self):
		self.assertListEqual(list(graph.bits(0)), [])
		self.assertEqual(graph.popcount(0), 0)

	def testMaskOf(self):
		m = graph.mask_of([4, 1, 1])
		self.assertEqual(m, 0b10010)
		self.assertEqual(graph.lowest(m), 1)
		self.assertEqual(graph.members(m), frozenset({1, 4}))

class TestGraphConstruction(unittest.TestCase):

	def testSelfLoop(self):
		with self.assertRaises(InputError):
			Graph(3, [(1, 1)])

	def testOutOfRange(self):
		with self.assertRaises(InputError):
			Graph(3, [(0, 3)])

	def testNegativeSize(self):
		with self.assertRaises(InputError):
			Graph(-1)

	def testRepeatedEdgesHarmless(self):
		g = Graph(3, [(0, 1), (1, 0), (0, 1)])
		self.assertEqual(g.m, 1)

	def testVertexCap(self):
		saved = ProgramGlobals['vertex_cap']
		try:
			ProgramGlobals['vertex_cap'] = 4
			with self.assertRaises(InputError):
				Graph(5)
			Graph(4)
		finally:
			ProgramGlobals['vertex_cap'] = saved

	def testEmptyGraph(self):
		g = Graph(0)
		self.assertEqual(g.n, 0)
		self.assertEqual(g.edges(), [])
		self.assertTrue(g.is_clique())
		self.assertTrue(graph.is_connected(g))

class BaseGraphTest(unittest.TestCase):
	"""Basic queries, checked against the expected values below."""

	g = samples.C6
	m = 6
	degrees = (2, 2, 2, 2, 2, 2)
	components = [frozenset(range(6))]

	def testEdgeCount(self):
		self.assertEqual(self.g.m, self.m)
		self.assertEqual(len(self.g.edges()), self.m)

	def testEdgesSorted(self):
		edges = self.g.edges()
		self.assertListEqual(edges, sorted(edges))
		for u, v in edges:
			self.assertLess(u, v)

	def testSymmetric(self):
		for u in self.g.vertices:
			for v in self.g.vertices:
				self.assertEqual(self.g.has_edge(u, v), self.g.has_edge(v, u))

	def testDegrees(self):
		self.assertTupleEqual(tuple(self.g.degree(v) for v in self.g.vertices), self.degrees)

	def testComponents(self):
		self.assertListEqual(graph.connected_components(self.g), self.components)

	def testComplementInvolution(self):
		self.assertEqual(graph.complement(graph.complement(self.g)), self.g)

	def testNetworkx(self):
		G = self.g.to_networkx()
		self.assertEqual(G.number_of_nodes(), self.g.n)
		self.assertEqual(G.number_of_edges(), self.m)

class TestCycleGraph(BaseGraphTest):
	pass

class TestBullGraph(BaseGraphTest):
	g = samples.BULL
	m = 5
	degrees = (1, 3, 3, 1, 2)

class TestTwoTriangles(BaseGraphTest):
	g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
	m = 6
	degrees = (2, 2, 2, 2, 2, 2)
	components = [frozenset({0, 1, 2}), frozenset({3, 4, 5})]

	def testNotConnected(self):
		self.assertFalse(graph.is_connected(self.g))

	def testComplementConnected(self):
		self.assertTrue(graph.is_connected(graph.complement(self.g)))

class TestInducedSubgraph(unittest.TestCase):

	def testRenumbering(self):
		sub, mapping = graph.induced_subgraph(samples.C6, [5, 0, 1])
		self.assertDictEqual(mapping, {0 : 0, 1 : 1, 5 : 2})
		self.assertListEqual(sub.edges(), [(0, 1), (0, 2)])

	def testBadVertex(self):
		with self.assertRaises(InputError):
			graph.induced_subgraph(samples.C6, [0, 6])

	def testPartialMask(self):
		# on C6, {0, 1} is seen partially by 2 and 5 and not at all by 3, 4
		partial = graph.partial_mask(samples.C6, graph.mask_of([0, 1]))
		self.assertEqual(graph.members(partial), frozenset({2, 5}))

class TestPaths(unittest.TestCase):

	def testShortestPath(self):
		self.assertListEqual(graph.shortest_path(samples.C6, 0, 3), [0, 1, 2, 3])
		self.assertListEqual(graph.shortest_path(samples.C6, 2, 2), [2])

	def testShortestPathWithin(self):
		self.assertListEqual(graph.shortest_path(samples.C6, 0, 2, within=[3, 4, 5]), [0, 5, 4, 3, 2])
		self.assertIsNone(graph.shortest_path(samples.C6, 0, 2, within=[4, 5]))

	def testChordlessPathsOnCycle(self):
		paths = sorted(graph.chordless_paths(samples.C6, 0, 3), key=len)
		self.assertEqual(len(paths), 2)
		self.assertTrue(all(len(p) == 4 for p in paths))

	def testChordlessPathsMaxLen(self):
		self.assertListEqual(graph.chordless_paths(samples.C6, 0, 2, max_len=2), [[0, 1, 2]])

	def testChordlessSkipsChords(self):
		# in K4 minus an edge, 0-1-3 and 0-2-3 are chordless, 0-1-2-3 is not
		g = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
		paths = graph.chordless_paths(g, 0, 3)
		self.assertEqual(sorted(paths), [[0, 1, 3], [0, 2, 3]])

	def testSameEndpoints(self):
		with self.assertRaises(InputError):
			graph.chordless_paths(samples.C6, 1, 1)

	def testInducedPredicates(self):
		g = samples.C6
		self.assertTrue(graph.is_induced_path(g, [0, 1, 2, 3]))
		self.assertFalse(graph.is_induced_path(g, [0, 1, 2, 3, 4, 5]))
		self.assertTrue(graph.is_induced_cycle(g, list(range(6))))
		self.assertFalse(graph.is_induced_cycle(g, [0, 1, 2]))

class TestVerdict(unittest.TestCase):

	def testUnpack(self):
		ok, witness = graph.Verdict(False, (1, 2), 'why')
		self.assertFalse(ok)
		self.assertEqual(witness, (1, 2))

	def testTruth(self):
		self.assertTrue(graph.Verdict(True))
		self.assertFalse(graph.Verdict(False))

if __name__ == '__main__':
	unittest.main()
