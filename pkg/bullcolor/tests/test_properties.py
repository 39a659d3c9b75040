#!/usr/bin/env python3
"""Randomized agreement between the structural algorithms and the oracles."""

import unittest
from hypothesis import given, settings, assume, HealthCheck
from hypothesis import strategies as st

from bullcolor import driver, generators, oracle
from bullcolor.boxes import build_box_partition, validate_box_partition
from bullcolor.errors import ClassViolation
from bullcolor.graph import Graph
from bullcolor.orientation import orient_components, verify_transitive, verify_acyclic
from bullcolor.coloring import TraceNode, BOX_ORIENTATION
from bullcolor.recognition import is_class_member, find_shortest_even_hole

SPECS = (
	'hole(6)', 'hole(8)', 'bull', 'lock', 'wheel(6)', 'double-broom',
	'spiked(F1)', 'spiked(F2)', 'sensitive(hole=6)', 'sensitive(hole=8)',
	'blowup:hole=6,size=2', 'attach:hole=6,count=2', 'attach:hole=8,count=3',
	'peripheral:hole=6,depth=2,branch=2', 'random:n=6,p=30',
)

STRICT_SPECS = ('hole(6)', 'hole(8)', 'bull', 'peripheral:hole=6,depth=2,branch=2')

slow = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

@st.composite
def instances(draw, specs=SPECS):
	spec = draw(st.sampled_from(specs))
	seed = draw(st.integers(min_value=0, max_value=1000))
	return generators.generate(generators.parse_spec(spec, seed)).graph

@st.composite
def small_graphs(draw, max_n=7):
	n = draw(st.integers(min_value=0, max_value=max_n))
	pairs = [(u, v) for u in range(n) for v in range(u+1, n)]
	keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
	return Graph(n, [e for e, k in zip(pairs, keep) if k])

class TestColoringAgreesWithOracle(unittest.TestCase):

	@slow
	@given(instances())
	def testGenerated(self, g):
		coloring, trace = driver.color_driver(g)
		self.assertTrue(coloring.check(g))
		k, _ = oracle.oracle_chromatic(g)
		self.assertEqual(coloring.count, k)
		self.assertEqual(trace.colors, k)

	@slow
	@given(small_graphs())
	def testArbitrary(self, g):
		# every graph is either coloured optimally or refused with a witness
		if not is_class_member(g):
			with self.assertRaises(ClassViolation):
				driver.color_driver(g)
			return
		coloring, _ = driver.color_driver(g)
		self.assertTrue(coloring.check(g))
		self.assertEqual(coloring.count, oracle.oracle_chromatic(g)[0])

class TestWeightedAgreesWithClique(unittest.TestCase):

	@slow
	@given(instances(), st.data())
	def testWeighted(self, g, data):
		w = data.draw(st.lists(st.integers(min_value=0, max_value=3), min_size=g.n, max_size=g.n))
		wc, _ = driver.weighted_color(g, w)
		self.assertTrue(wc.check(g, w))
		_, weight = oracle.max_weight_clique(g, w)
		self.assertEqual(wc.total, weight)

class TestStructures(unittest.TestCase):

	@slow
	@given(instances(STRICT_SPECS))
	def testBoxPartition(self, g):
		assume(find_shortest_even_hole(g) is not None)
		bp = build_box_partition(g)
		self.assertListEqual(validate_box_partition(g, bp), [])

	@slow
	@given(instances(STRICT_SPECS))
	def testOrientation(self, g):
		o = orient_components(g, TraceNode(BOX_ORIENTATION, g.n))
		self.assertTrue(verify_transitive(g, o))
		self.assertTrue(verify_acyclic(g, o))

	@slow
	@given(instances())
	def testTrichotomy(self, g):
		self.assertTrue(driver.trichotomy(g))

if __name__ == '__main__':
	unittest.main()
