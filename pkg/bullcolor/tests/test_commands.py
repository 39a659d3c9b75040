#!/usr/bin/env python3

import json
import os.path
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO

from bullcolor.__main__ import main
from bullcolor.graph_parser import format_dimacs, format_json
from bullcolor.report import EXIT_OK, EXIT_USAGE, EXIT_REFUSED, EXIT_FAILED
from bullcolor.util import ProgramGlobals
from bullcolor.tests import samples
from bullcolor.tests.test_decomposition import TWIN_C6

class BaseCommandTest(unittest.TestCase):
	"""Run the tool in a scratch directory; ProgramGlobals are restored."""

	def setUp(self):
		self.saved = dict(ProgramGlobals)
		self.tmp = tempfile.TemporaryDirectory()
		self.stderr = StringIO()

	def tearDown(self):
		ProgramGlobals.clear()
		ProgramGlobals.update(self.saved)
		self.tmp.cleanup()

	def path(self, name):
		return os.path.join(self.tmp.name, name)

	def write(self, name, text):
		fn = self.path(name)
		with open(fn, 'w') as f:
			f.write(text)
		return fn

	def read(self, name):
		with open(self.path(name)) as f:
			return f.read()

	def run_tool(self, *argv, out='out.txt'):
		argv = list(argv) + ['--out', self.path(out)]
		with redirect_stderr(self.stderr):
			return main(argv)

	def report(self, *argv):
		status = self.run_tool(*argv, '--emit', 'json', out='report.json')
		doc = json.loads(self.read('report.json'))
		self.assertEqual(doc['status'], status)
		return doc

class TestRecognize(BaseCommandTest):

	def testMember(self):
		fn = self.write('c6.col', format_dimacs(samples.C6))
		self.assertEqual(self.run_tool('recognize', fn), EXIT_OK)

	def testOddHole(self):
		fn = self.write('c5.col', format_dimacs(samples.C5))
		doc = self.report('recognize', fn)
		self.assertEqual(doc['status'], EXIT_REFUSED)
		failed = [c for c in doc['checks'] if c['ok'] is False]
		self.assertEqual(failed[0]['name'], 'no odd hole')

	def testBull(self):
		fn = self.write('net.json', format_json(samples.NET))
		self.assertEqual(self.run_tool('recognize', fn), EXIT_REFUSED)

	def testTwoSpecs(self):
		self.assertEqual(self.run_tool('recognize', '--spec', 'bull', '--spec', 'lock'), EXIT_USAGE)

class TestColor(BaseCommandTest):

	def testGenerated(self):
		doc = self.report('color', '--spec', 'sensitive(hole=6)')
		self.assertEqual(doc['status'], EXIT_OK)
		self.assertEqual(doc['certificates']['coloring']['count'], 3)
		self.assertEqual(doc['source'], 'sensitive:hole=6')

	def testOddHoleRefused(self):
		fn = self.write('c5.col', format_dimacs(samples.C5))
		self.assertEqual(self.run_tool('color', fn), EXIT_REFUSED)
		self.assertIn('odd hole', self.stderr.getvalue())

	def testOracleSkipped(self):
		doc = self.report('color', '--spec', 'hole(8)', '--oracle-cap', '4')
		self.assertEqual(doc['status'], EXIT_OK)
		skipped = [c for c in doc['checks'] if c['name'] == 'oracle chromatic number']
		self.assertIsNone(skipped[0]['ok'])

	def testEveryOutput(self):
		for emit in ('text', 'cert', 'json', 'xml', 'dot'):
			with self.subTest(emit=emit):
				self.assertEqual(self.run_tool('color', '--spec', 'hole(6)', '--emit', emit), EXIT_OK)
				self.assertTrue(self.read('out.txt'))

class TestWeighted(BaseCommandTest):

	def testJsonWeights(self):
		fn = self.write('bull.json', format_json(samples.BULL, [4, 1, 1, 4, 1]))
		doc = self.report('color-weighted', fn)
		self.assertEqual(doc['status'], EXIT_OK)
		self.assertEqual(doc['certificates']['weighted coloring']['total'], 5)

	def testWeightsFile(self):
		fn = self.write('c6.col', format_dimacs(samples.C6))
		wfn = self.write('c6.w', '2 1 1\n1 1 1\n')
		self.assertEqual(self.run_tool('color-weighted', fn, '--weights', wfn), EXIT_OK)

	def testNoWeights(self):
		fn = self.write('c6.col', format_dimacs(samples.C6))
		self.assertEqual(self.run_tool('color-weighted', fn), EXIT_USAGE)

class TestCertificates(BaseCommandTest):

	def setUp(self):
		super().setUp()
		self.graph = self.write('c6.col', format_dimacs(samples.C6))

	def testColoringRoundTrip(self):
		self.assertEqual(self.run_tool('color', self.graph, '--emit', 'cert', out='c6.cert'), EXIT_OK)
		cert = self.path('c6.cert')
		self.assertEqual(self.run_tool('verify', self.graph, '--certificate', cert), EXIT_OK)

	def testBadColoring(self):
		cert = self.write('bad.cert', '# coloring\n0 0\n1 0\n2 1\n3 0\n4 1\n5 1\n')
		self.assertEqual(self.run_tool('verify', self.graph, '--certificate', cert), EXIT_FAILED)

	def testTamperedOrientation(self):
		self.assertEqual(self.run_tool('orient', self.graph, '--emit', 'cert', out='o.cert'), EXIT_OK)
		lines = self.read('o.cert').splitlines()
		tail, head, tag = lines[1].split()
		lines[1] = ' '.join((head, tail, tag))
		cert = self.write('o.cert', '\n'.join(lines) + '\n')
		doc = self.report('verify', self.graph, '--certificate', cert)
		self.assertEqual(doc['status'], EXIT_FAILED)
		failed = [c['name'] for c in doc['checks'] if c['ok'] is False]
		self.assertIn('transitive', failed)

	def testBoxes(self):
		self.assertEqual(self.run_tool('boxes', self.graph, '--emit', 'cert', out='b.cert'), EXIT_OK)
		cert = self.path('b.cert')
		self.assertEqual(self.run_tool('verify', self.graph, '--certificate', cert), EXIT_OK)

	def testNoCertificate(self):
		self.assertEqual(self.run_tool('verify', self.graph), EXIT_USAGE)

class TestOtherCommands(BaseCommandTest):

	def testDecompose(self):
		fn = self.write('twins.json', format_json(TWIN_C6))
		doc = self.report('decompose', fn)
		self.assertEqual(doc['status'], EXIT_OK)
		found = [c for c in doc['checks'] if c['name'] == 'has a homogeneous set']
		self.assertEqual(found[0]['witness'], [0, 6])

	def testClique(self):
		fn = self.write('bull.json', format_json(samples.BULL))
		self.assertEqual(self.run_tool('clique', fn), EXIT_OK)

	def testGenerateThenColor(self):
		status = self.run_tool('generate', '--spec', 'attach:hole=6,count=2', '--seed', '4',
			'--emit', 'cert', out='g.json')
		self.assertEqual(status, EXIT_OK)
		self.assertEqual(self.run_tool('color', self.path('g.json')), EXIT_OK)

	def advertisedCheck(self, spec):
		doc = self.report('generate', '--spec', spec, '--seed', '4')
		found = [c for c in doc['checks'] if c['name'] == 'advertised class']
		self.assertEqual(len(found), 1)
		return found[0]

	def testGenerateRechecksClass(self):
		check = self.advertisedCheck('attach:hole=6,count=2')
		self.assertIs(check['ok'], True)
		check = self.advertisedCheck('peripheral:hole=6,depth=1')
		self.assertIs(check['ok'], True)
		self.assertEqual(check['detail'], 'B')

	def testGenerateNothingAdvertised(self):
		check = self.advertisedCheck('hole(5)')
		self.assertIsNone(check['ok'])
		self.assertEqual(check['detail'], 'nothing advertised')

	def testBench(self):
		doc = self.report('bench', '--spec', 'hole(6)', '--spec', 'bull', '--count', '2')
		self.assertEqual(doc['status'], EXIT_OK)
		self.assertEqual(len(doc['rows']), 4)
		self.assertTrue(all(r['ok'] for r in doc['rows']))

class TestUsage(BaseCommandTest):

	def testDescribe(self):
		out = StringIO()
		with redirect_stdout(out):
			self.assertEqual(main(['color', '--emit', 'dot', '--describe']), EXIT_OK)
		self.assertIn('DOT Output', out.getvalue())

	def testUnknownCommand(self):
		with self.assertRaises(SystemExit) as cm:
			self.run_tool('paint', 'g.col')
		self.assertEqual(cm.exception.code, EXIT_USAGE)

	def testVertexCap(self):
		with self.assertRaises(SystemExit) as cm:
			self.run_tool('color', '--spec', 'bull', '--vertex-cap', '0')
		self.assertEqual(cm.exception.code, EXIT_USAGE)

	def testNoInput(self):
		self.assertEqual(self.run_tool('color'), EXIT_USAGE)

	def testMissingFile(self):
		self.assertEqual(self.run_tool('color', self.path('nope.col')), EXIT_USAGE)

	def testSelfLoop(self):
		fn = self.write('loop.col', 'p edge 2 1\ne 1 1\n')
		self.assertEqual(self.run_tool('color', fn), EXIT_USAGE)
		self.assertIn('loop.col:2', self.stderr.getvalue())

	def testUnknownGenerator(self):
		self.assertEqual(self.run_tool('color', '--spec', 'petersen'), EXIT_USAGE)

if __name__ == '__main__':
	unittest.main()
