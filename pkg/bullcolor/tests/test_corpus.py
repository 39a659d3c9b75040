#!/usr/bin/env python3
"""Runs over seeded corpora of generated instances.

By default each corpus is cut to a small share of its full size.
BULLCOLOR_CORPUS scales every corpus: BULLCOLOR_CORPUS=1 runs ten thousand
members for the three cases, a thousand colorings against the oracle, five
hundred box partitions, and two hundred each of spiked decompositions,
sensitive extensions and weighted colorings.  That takes minutes.
"""

import os
import unittest
from itertools import count

from bullcolor import generators
from bullcolor.boxes import build_box_partition, build_hole_skeleton, validate_box_partition
from bullcolor.coloring import chain_color
from bullcolor.decomposition import find_homogeneous_set, homogeneous_from_spiked, is_homogeneous
from bullcolor.driver import color_driver, weighted_color, trichotomy
from bullcolor.errors import GenerationError
from bullcolor.graph import induced_subgraph
from bullcolor.oracle import oracle_chromatic, oracle_clique, max_weight_clique
from bullcolor.orientation import (
	orient_by_rules, make_acyclic_transitive, verify_transitive, verify_acyclic,
	comparability_orientation, build_sensitive_context, extend_orientation_sensitive
)
from bullcolor.recognition import (
	StructureWitness, is_class_member, find_sensitive_vertex, find_shortest_even_hole
)

SCALE = float(os.environ.get('BULLCOLOR_CORPUS', '0.02'))

def corpus_size(full):
	return max(4, int(full * SCALE))

def corpus(specs, wanted, keep=lambda inst: True, attempts=20):
	"""Yield up to wanted instances, cycling through specs with rising seeds
	and dropping those keep rejects or the generator gives up on."""
	found = 0
	for seed in count():
		if found == wanted or seed == wanted * attempts:
			return
		spec = specs[seed % len(specs)]
		try:
			inst = generators.generate(generators.parse_spec(spec, seed))
		except GenerationError:
			continue
		if keep(inst):
			found += 1
			yield inst

SMALL_SPECS = tuple(
	'random:n={},p={}'.format(n, p) for n in range(4, 10) for p in (20, 35, 50, 65)
) + (
	'hole(6)', 'hole(8)', 'bull', 'lock', 'wheel(6)', 'spiked(F1)', 'sensitive(hole=6)',
	'blowup:hole=6,size=2', 'attach:hole=6,count=2', 'attach:hole=6,count=3',
	'spiked:F1,count=2', 'sensitive:closed=0,count=0', 'peripheral:hole=6,depth=1',
)

MEDIUM_SPECS = (
	'blowup:hole=6,size=2', 'blowup:hole=8,size=2', 'attach:hole=6,count=3',
	'attach:hole=8,count=4', 'peripheral:hole=6,depth=2,branch=2', 'wheel(8)',
	'spiked:F1,count=3', 'spiked:F2,count=4', 'sensitive:hole=8,count=3',
	'sensitive:closed=0,count=3', 'sensitive:hole=8,closed=0,count=3',
	'random:n=10,p=30', 'random:n=12,p=25',
)

BOX_SPECS = (
	'peripheral:hole=6,depth=1,branch=1', 'attach:hole=6,count=2', 'attach:hole=8,count=3',
	'peripheral:hole=8,depth=2,branch=1', 'attach:hole=6,count=4', 'blowup:hole=8,size=2',
	'attach:hole=10,count=3', 'spiked:F2,count=3', 'wheel(6)', 'lock',
)

class TestThreeCases(unittest.TestCase):

	def testEveryMemberHasACase(self):
		seen = 0
		for inst in corpus(SMALL_SPECS, corpus_size(10000), attempts=2):
			with self.subTest(spec=generators.format_spec(inst.spec)):
				self.assertTrue(trichotomy(inst.graph))
			seen += 1
		self.assertGreater(seen, 0)

class TestDriverAgainstOracle(unittest.TestCase):

	def testColorCount(self):
		for inst in corpus(MEDIUM_SPECS, corpus_size(1000)):
			g = inst.graph
			with self.subTest(spec=generators.format_spec(inst.spec)):
				coloring, _ = color_driver(g)
				self.assertTrue(coloring.check(g))
				self.assertEqual(coloring.count, oracle_chromatic(g)[0])
				self.assertEqual(coloring.count, oracle_clique(g)[0])

	def testWeighted(self):
		specs = tuple(s + ',wmax=5' for s in MEDIUM_SPECS if ':' in s)
		for inst in corpus(specs, corpus_size(200)):
			g, w = inst.graph, inst.meta['weights']
			with self.subTest(spec=generators.format_spec(inst.spec)):
				wc, _ = weighted_color(g, w)
				self.assertTrue(wc.check(g, w))
				for v in range(g.n):
					self.assertGreaterEqual(wc.coverage(v), w[v])
				self.assertEqual(wc.total, max_weight_clique(g, w)[1])

def _box_ready(inst):
	g = inst.graph
	return (
		find_shortest_even_hole(g) is not None
		and is_class_member(g, strict=True)
		and find_sensitive_vertex(g) is None
		and find_homogeneous_set(g) is None
	)

class TestBoxCorpus(unittest.TestCase):

	def testBoxesAndRules(self):
		seen = 0
		for inst in corpus(BOX_SPECS, corpus_size(500), keep=_box_ready):
			g = inst.graph
			with self.subTest(spec=generators.format_spec(inst.spec)):
				hole = find_shortest_even_hole(g)
				self.assertListEqual(build_hole_skeleton(g, hole).violations(g), [])
				bp = build_box_partition(g, hole)
				self.assertListEqual(validate_box_partition(g, bp), [])
				o = orient_by_rules(g, bp)
				self.assertTrue(verify_transitive(g, o))
				self.assertTrue(verify_acyclic(g, make_acyclic_transitive(g, o)))
			seen += 1
		self.assertGreater(seen, 0)

class TestSpikedCorpus(unittest.TestCase):

	def testHomogeneousSet(self):
		specs = ('spiked:F1,count=2', 'spiked:F2,count=2', 'spiked:F1,count=4', 'spiked:F2,count=4')
		for inst in corpus(specs, corpus_size(200)):
			g = inst.graph
			witness = StructureWitness(inst.meta['structure'], inst.meta['planted'])
			with self.subTest(spec=generators.format_spec(inst.spec), roles=inst.meta.get('roles')):
				dec = homogeneous_from_spiked(g, witness)
				self.assertTrue(is_homogeneous(g, dec.h))
				self.assertLessEqual(set(witness.core), dec.h)

def _strict(inst):
	return is_class_member(inst.graph, strict=True)

class TestSensitiveCorpus(unittest.TestCase):

	def testExtension(self):
		specs = (
			'sensitive:closed=0,count=2', 'sensitive:count=2', 'sensitive:closed=0,count=4',
			'sensitive:hole=8,count=3', 'sensitive:hole=8,closed=0,count=1',
		)
		for inst in corpus(specs, corpus_size(200), keep=_strict):
			g = inst.graph
			x, u = inst.meta['planted'][0], inst.meta['planted'][1:7]
			with self.subTest(spec=generators.format_spec(inst.spec), roles=inst.meta.get('roles')):
				ctx = build_sensitive_context(g, x, u)
				keep = [v for v in range(g.n) if v != x]
				sub, _ = induced_subgraph(g, keep)
				base = comparability_orientation(sub)
				self.assertIsNotNone(base)
				o = extend_orientation_sensitive(g, ctx, base.lift(keep, g.n))
				self.assertTrue(verify_transitive(g, o))
				self.assertTrue(verify_acyclic(g, o))
				self.assertEqual(chain_color(g, o).count, oracle_chromatic(g)[0])

if __name__ == '__main__':
	unittest.main()
