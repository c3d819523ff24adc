#!/usr/bin/env python3
"""End-to-end checks of the syz command line tool."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

SYZ = SCHEMA = SAMPLES = None


def run(*args, check_json=True):
    p = subprocess.run([SYZ, *args], capture_output=True, text=True, timeout=600)
    report = None
    if check_json and "--json" in args:
        report = json.loads(p.stdout)
        jsonschema.validate(report, SCHEMA)
    return p, report


def strip_times(x):
    if isinstance(x, dict):
        return {k: strip_times(v) for k, v in x.items() if k not in ("timings", "seconds", "command")}
    if isinstance(x, list):
        return [strip_times(v) for v in x]
    return x


def sample(name):
    return os.path.join(SAMPLES, name)


class Betti(unittest.TestCase):
    def test_twisted_cubic_text(self):
        p, _ = run("betti", sample("twisted_cubic.ideal"))
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertIn("1:    .    3    2    .", p.stdout)

    def test_json_report(self):
        p, r = run("betti", sample("quartic_rnc.ideal"), "--json")
        self.assertEqual(p.returncode, 0)
        self.assertEqual(r["status"], "ok")
        self.assertEqual(r["field_char"], 32003)
        self.assertRegex(r["inputs"][0]["fingerprint"], "^[0-9a-f]{16}$")
        dims = {(e["p"], e["q"]): e["dim"] for e in r["results"]["betti"]["entries"]}
        self.assertEqual([dims[(k, 1)] for k in range(1, 5)], [6, 8, 3, 0])

    def test_variety_at_other_prime(self):
        p, r = run("betti", "--variety", "scroll 1 2", "--field-char", "31991", "--json")
        self.assertEqual(p.returncode, 0)
        self.assertEqual(r["results"]["betti"]["char"], 31991)


class Errors(unittest.TestCase):
    def test_field_conflict_is_input_error(self):
        p, r = run("betti", sample("twisted_cubic.ideal"), "--field-char", "31991", "--json")
        self.assertEqual(p.returncode, 2)
        self.assertEqual(r["status"], "error")
        self.assertIn("conflicts", r["error"])

    def test_usage_errors(self):
        self.assertEqual(run("betti", "--nonsense")[0].returncode, 2)
        self.assertEqual(run()[0].returncode, 2)
        self.assertEqual(run("--help")[0].returncode, 0)

    def test_missing_file_and_bad_prime(self):
        self.assertEqual(run("betti", "/nonexistent.ideal")[0].returncode, 2)
        self.assertEqual(run("betti", sample("twisted_cubic.ideal"), "--field-char", "12")[0].returncode, 2)

    def test_no_class_available(self):
        p, r = run("syzscheme", "--variety", "ci 2 2 2", "--p", "2", "--json")
        self.assertEqual(p.returncode, 2)
        self.assertIn("zero", r["error"])

    def test_budget_is_resource_error(self):
        p, r = run("betti", "--variety", "rnc 5", "--entry-budget", "10", "--json")
        self.assertEqual(p.returncode, 2)
        self.assertEqual(r["status"], "error")


class Classes(unittest.TestCase):
    def test_cocycles_and_file_round_trip(self):
        p, r = run("cocycles", sample("twisted_cubic.ideal"), "--p", "2", "--json")
        self.assertEqual(r["results"]["dimension"], 2)
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(r["results"]["cocycles"][1], f)
        try:
            p, s = run("syzscheme", sample("twisted_cubic.ideal"), "--cocycle", f.name, "--json")
            self.assertEqual(p.returncode, 0, p.stderr)
            self.assertTrue(s["results"]["equals_input_after_saturation"])
            self.assertEqual(len(s["inputs"]), 2)
        finally:
            os.unlink(f.name)

    def test_non_cocycle_rejected(self):
        bad = {"p": 2, "nvars": 4, "terms": [{"wedge": [0, 1], "var": 2, "coeff": 1}]}
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(bad, f)
        try:
            p, _ = run("syzscheme", sample("twisted_cubic.ideal"), "--cocycle", f.name)
            self.assertEqual(p.returncode, 2)
        finally:
            os.unlink(f.name)

    def test_syzscheme_output_is_a_readable_ideal(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "syz.ideal")
            p, _ = run("syzscheme", sample("quartic_rnc.ideal"), "--p", "3", "--random", "-o", out)
            self.assertEqual(p.returncode, 0, p.stderr)
            p, r = run("betti", out, "--json", "--qmax", "1")
            self.assertEqual(p.returncode, 0, p.stderr)

    def test_project_and_reconstruct(self):
        p, r = run("project", sample("twisted_cubic.ideal"), "--p", "2", "--point", "1:1:1:1", "--json")
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertFalse(r["results"]["zero_class"])
        self.assertEqual(run("project", sample("twisted_cubic.ideal"), "--p", "2", "--point", "1:1:0:0")[0].returncode, 2)
        p, r = run("reconstruct", "--variety", "scroll 1 2", "--p", "2", "--random", "--json")
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertEqual(r["status"], "pass")
        self.assertTrue(r["results"]["pointwise_inclusion"])

    def test_resolve(self):
        p, r = run("resolve", sample("twisted_cubic.ideal"), "--json")
        self.assertEqual(p.returncode, 0, p.stderr)
        dims = {(e["p"], e["q"]): e["dim"] for e in r["results"]["betti"]["entries"]}
        self.assertEqual((dims[(1, 1)], dims[(2, 1)]), (3, 2))


class Build(unittest.TestCase):
    def test_recipe_file(self):
        p, r = run("build", "--file", sample("recipes.txt"), "--json")
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertEqual(len(r["results"]["schemes"]), 7)

    def test_single_recipe(self):
        p, _ = run("build", "rnc", "3")
        self.assertEqual(p.returncode, 0)
        self.assertIn("-x1^2 + x0*x2", p.stdout)
        self.assertEqual(run("build", "torus")[0].returncode, 2)


class Verify(unittest.TestCase):
    def test_suite_passes_and_replays_identically(self):
        args = ("verify", "ep", "--variety", "rnc 3", "--samples", "3", "--seed", "5", "--json")
        p1, r1 = run(*args)
        p2, r2 = run(*args, "--jobs", "2")
        self.assertEqual(p1.returncode, 0, p1.stderr)
        self.assertEqual(r1["status"], "pass")
        r2["results"]["config"]["jobs"] = r1["results"]["config"]["jobs"]
        self.assertEqual(strip_times(r1), strip_times(r2))

    def test_single_case_matches_full_run(self):
        _, full = run("verify", "membership", "--variety", "rnc 4", "--json")
        case = full["results"]["cases"][0]
        _, one = run("verify", "membership", "--variety", "rnc 4", "--case", case["id"], "--json")
        self.assertEqual(strip_times(one["results"]["cases"]), strip_times([case]))

    def test_replay_reruns_the_first_failure(self):
        _, full = run("verify", "scroll-betti", "--json")
        target = full["results"]["cases"][2]
        fake = {"results": {"suite": "scroll-betti", "config": full["results"]["config"], "first_failure": target}}
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(fake, f)
        try:
            p, r = run("verify", "--replay", f.name, "--json")
            self.assertEqual(p.returncode, 0, p.stderr)
            self.assertEqual([c["id"] for c in r["results"]["cases"]], [target["id"]])
            self.assertEqual(strip_times(r["results"]["cases"][0]), strip_times(target))
        finally:
            os.unlink(f.name)

    def test_unknown_suite(self):
        self.assertEqual(run("verify", "nope")[0].returncode, 2)


if __name__ == "__main__":
    SYZ, schema_path, SAMPLES = sys.argv[1:4]
    with open(schema_path) as f:
        SCHEMA = json.load(f)
    jsonschema.Draft7Validator.check_schema(SCHEMA)
    unittest.main(argv=sys.argv[:1] + sys.argv[4:], verbosity=2)
