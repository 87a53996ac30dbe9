#!/usr/bin/env python3
"""End-to-end checks of the dense-points executable.

usage: test_cli.py <dense-points> <corpus-dir> <schema.json> <data-dir>
"""

import json
import os
import re
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI, CORPUS, SCHEMA, DATA = sys.argv[1:5]
del sys.argv[1:5]


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def corpus_files():
    return sorted(os.path.join(CORPUS, f) for f in os.listdir(CORPUS) if f.endswith(".json"))


def no_json_ints(node, path="$"):
    """Yield paths of JSON integers outside the echoed scenario."""
    if isinstance(node, bool):
        return
    if isinstance(node, int):
        yield path
    elif isinstance(node, dict):
        for k, v in node.items():
            if path == "$" and k == "scenario":
                continue
            yield from no_json_ints(v, f"{path}.{k}")
    elif isinstance(node, list):
        for i, v in enumerate(node):
            yield from no_json_ints(v, f"{path}[{i}]")


class ExitCodes(unittest.TestCase):
    def test_malformed_json(self):
        code, _, err = run("run", os.path.join(DATA, "malformed.json"))
        self.assertEqual(code, 1)
        self.assertIn("malformed JSON", err)

    def test_missing_field_named(self):
        code, _, err = run("run", os.path.join(DATA, "missing_quadric.json"))
        self.assertEqual(code, 1)
        self.assertIn("scenario.payload.quadric", err)

    def test_missing_file(self):
        code, _, err = run("run", os.path.join(DATA, "does_not_exist.json"))
        self.assertEqual(code, 1)
        self.assertIn("cannot open", err)

    def test_concurrent_hyperplanes(self):
        code, out, err = run("run", os.path.join(DATA, "concurrent_hyperplanes.json"))
        self.assertEqual(code, 2)
        self.assertIn("general position", err)
        self.assertEqual(json.loads(out)["status"], "hypothesis_failure")

    def test_tangent_line_in_quadric(self):
        code, _, err = run("run", os.path.join(DATA, "line_in_quadric_tangent.json"))
        self.assertEqual(code, 2)
        self.assertIn("open problem", err)

    def test_bad_arguments(self):
        self.assertEqual(run()[0], 1)
        self.assertEqual(run("units", "--bound", "3")[0], 1)
        self.assertEqual(run("units", "--s", "2,4")[0], 1)

    def test_help(self):
        code, out, _ = run("--help")
        self.assertEqual(code, 0)
        self.assertIn("run", out)


class Subcommands(unittest.TestCase):
    def test_verify(self):
        code, out, _ = run("verify", os.path.join(DATA, "verify_points.json"),
                           os.path.join(DATA, "verify_config.json"), "--s", "2,3")
        self.assertEqual(code, 0)
        rep = json.loads(out)
        self.assertEqual(rep["counts"]["verified"], "2")
        self.assertEqual(rep["counts"]["rejected"], "2")
        verdicts = rep["extras"]["verdicts"]
        self.assertEqual([v["integral"] for v in verdicts], [True, False, False, True])
        self.assertEqual(verdicts[1]["offending"], [{"prime": "5", "component": "1"}])
        self.assertEqual(verdicts[2]["offending"], [{"prime": "0", "component": "1"}])

    def test_verify_smaller_s(self):
        code, out, _ = run("verify", os.path.join(DATA, "verify_points.json"),
                           os.path.join(DATA, "verify_config.json"), "--s", "2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["extras"]["verdicts"][0]["offending"], [{"prime": "3", "component": "1"}])

    def test_units(self):
        code, out, _ = run("units", "--s", "2,3", "--bound", "8")
        self.assertEqual(code, 0)
        rep = json.loads(out)
        sols = rep["extras"]["per_bound"][0]["solutions"]
        for pair in (["3", "-2"], ["9", "-8"], ["1/3", "2/3"], ["4", "-3"], ["3/4", "1/4"]):
            self.assertIn(pair, sols)
        self.assertEqual(rep["extras"]["per_bound"][0]["count"], str(len(sols)))

    def test_output_file_and_emit_points(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "r.json")
            code, stdout, _ = run("run", os.path.join(CORPUS, "theorem1_p2.json"), "-o", out, "--emit-points")
            self.assertEqual(code, 0)
            self.assertEqual(stdout, "")
            rep = json.load(open(out))
            self.assertEqual(len(rep["points"]), int(rep["counts"]["verified"]))

    def test_overrides(self):
        code, out, _ = run("run", os.path.join(CORPUS, "theorem1_p2.json"), "--cert-degree", "2", "--unit-bound", "1")
        self.assertEqual(code, 0)
        rep = json.loads(out)
        self.assertEqual(rep["certificate"]["degree"], "2")

    def test_integers_are_strings(self):
        for path in corpus_files():
            code, out, _ = run("run", path, "--emit-points")
            self.assertEqual(code, 0, path)
            self.assertEqual(list(no_json_ints(json.loads(out))), [], path)


class Determinism(unittest.TestCase):
    def test_byte_identical_without_timing(self):
        strip = re.compile(r'^\s*"timing_seconds":.*\n', re.M)
        with tempfile.TemporaryDirectory() as d:
            for path in corpus_files():
                texts = []
                for k in range(2):
                    out = os.path.join(d, f"{k}.json")
                    self.assertEqual(run("run", path, "-o", out)[0], 0, path)
                    texts.append(strip.sub("", open(out).read()))
                self.assertEqual(texts[0], texts[1], path)


class Schema(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.validator = jsonschema.Draft202012Validator(json.load(open(SCHEMA)))

    def test_corpus_valid(self):
        self.assertEqual(len(corpus_files()), 8)
        for path in corpus_files():
            errors = list(self.validator.iter_errors(json.load(open(path))))
            self.assertEqual(errors, [], path)

    def test_data_scenarios(self):
        for name in ("line_in_quadric_tangent", "concurrent_hyperplanes"):
            self.assertTrue(self.validator.is_valid(json.load(open(os.path.join(DATA, name + ".json")))), name)
        self.assertFalse(self.validator.is_valid(json.load(open(os.path.join(DATA, "missing_quadric.json")))))
        bad = json.load(open(os.path.join(CORPUS, "theorem1_p2.json")))
        bad["bounds"]["unit_bnd"] = 1
        self.assertFalse(self.validator.is_valid(bad))


if __name__ == "__main__":
    unittest.main(verbosity=2)
