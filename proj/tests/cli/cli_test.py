# Copyright 2026 The sdom Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end tests for the sdom command-line tool.

Usage: cli_test.py <path to sdom binary> <schema directory>
"""

import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = None
SCHEMAS = None

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


class CliTest(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = pathlib.Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def run_cli(self, *args, expect=EXIT_OK):
        proc = subprocess.run([BINARY, *map(str, args)], capture_output=True,
                              text=True, check=False)
        self.assertEqual(proc.returncode, expect,
                         f"sdom {' '.join(map(str, args))}\n"
                         f"stdout: {proc.stdout}\nstderr: {proc.stderr}")
        return proc

    def json_out(self, name, *args, expect=EXIT_OK):
        out = json.loads(self.run_cli(*args, expect=expect).stdout)
        jsonschema.validate(out, schema(name))
        return out

    def gen(self, family, *params):
        name = '_'.join(map(str, params)).replace('/', 'over')
        path = self.dir / f"{family}{name}.el"
        meta = self.json_out("gen", "gen", family, *params, "-o", path)
        sidecar = json.loads(pathlib.Path(f"{path}.json").read_text())
        self.assertEqual(sidecar, meta)
        return path, meta

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text)
        return path

    def test_gen_friendship(self):
        path, meta = self.gen("friendship", 3)
        self.assertEqual(meta["order"], 7)
        self.assertEqual(meta["size"], 9)
        self.assertEqual(meta["distinguished"], {"center": 0})
        self.assertEqual(path.read_text().splitlines()[0], "7 9")

    def test_gen_to_stdout(self):
        proc = self.run_cli("gen", "path", 3)
        self.assertEqual(proc.stdout, "3 2\n0 1\n1 2\n")
        jsonschema.validate(json.loads(proc.stderr), schema("gen"))

    def test_gen_single_vertex(self):
        path, meta = self.gen("path", 1)
        self.assertEqual(path.read_text(), "1 0\n")
        self.assertEqual(meta["order"], 1)

    def test_gen_gnp(self):
        _, meta = self.gen("gnp", 8, "1/2", 7)
        self.assertEqual(meta["p"], "1/2")
        self.assertEqual(meta["seed"], 7)
        self.assertEqual(meta["size"], 15)

    def test_gen_errors(self):
        self.run_cli("gen", "cycle", 2, expect=EXIT_USAGE)
        self.run_cli("gen", "grid", 3, expect=EXIT_USAGE)
        self.run_cli("gen", "path", expect=EXIT_USAGE)
        self.run_cli("gen", "gnp", 5, "2", expect=EXIT_USAGE)
        self.run_cli("--bogus", "gen", "path", 3, expect=EXIT_USAGE)
        self.run_cli("--guard-n", 0, "gen", "path", 3, expect=EXIT_USAGE)

    def test_gamma_sp_path(self):
        path, _ = self.gen("path", 5)
        out = self.json_out("gamma-sp", "gamma-sp", path)
        self.assertEqual(out["value"], 3)
        self.assertEqual(out["set"], [1, 2, 4])
        self.assertEqual(out["witnesses"], {"0": 1, "3": 2})

    def test_gamma_sp_single_vertex(self):
        path = self.write("k1.el", "1 0\n")
        self.assertEqual(self.json_out("gamma-sp", "gamma-sp", path)["value"], 1)

    def test_gamma_sp_guard(self):
        path, _ = self.gen("path", 30)
        proc = self.run_cli("gamma-sp", path, expect=EXIT_GUARD)
        self.assertIn("guard", proc.stderr)
        out = self.json_out("gamma-sp", "--guard-n", 30, "gamma-sp", path)
        self.assertEqual(out["value"], 15)

    def test_gamma_sp_parse_error(self):
        path = self.write("bad.el", "3 2\n0 1\n")
        self.run_cli("gamma-sp", path, expect=EXIT_USAGE)
        self.run_cli("gamma-sp", self.dir / "missing.el", expect=EXIT_USAGE)

    def test_gamma(self):
        path, _ = self.gen("path", 5)
        out = self.json_out("gamma", "gamma", path)
        self.assertEqual(out, {"value": 2, "set": [0, 3]})

    def test_text_format(self):
        path, _ = self.gen("path", 5)
        proc = self.run_cli("--format", "text", "gamma-sp", path)
        self.assertTrue(proc.stdout.startswith("gamma_sp = 3\n"))

    def test_check(self):
        c4, _ = self.gen("cycle", 4)
        out = self.json_out("check", "check", c4, "--set", "0,1")
        self.assertEqual(out, {"super_dominating": True,
                               "witnesses": {"2": 1, "3": 0}})
        k3, _ = self.gen("complete", 3)
        out = self.json_out("check", "check", k3, "--set", "0",
                            expect=EXIT_VIOLATED)
        self.assertEqual(out["violation"]["message"], "u=1: no witness")
        p3, _ = self.gen("path", 3)
        out = self.json_out("check", "check", p3, "--set", "0,1,2")
        self.assertEqual(out["witnesses"], {})
        self.run_cli("check", p3, "--set", "0,5", expect=EXIT_USAGE)
        self.run_cli("check", p3, "--set", "a", expect=EXIT_USAGE)

    def test_op_odot_then_gamma_sp(self):
        f2, _ = self.gen("friendship", 2)
        out = self.dir / "odot.el"
        meta = self.json_out("op", "op", "odot", f2, 0, "-o", out)
        self.assertEqual(meta["size"], 4)
        self.assertEqual(self.json_out("gamma-sp", "gamma-sp", out)["value"], 4)

    def test_op_contract(self):
        c4, _ = self.gen("cycle", 4)
        out = self.dir / "contract.el"
        meta = self.json_out("op", "op", "contract", c4, 0, "-o", out)
        self.assertEqual(meta["vertex_map"], [-1, 0, 1, 2])
        self.assertEqual(out.read_text(), "3 3\n0 1\n0 2\n1 2\n")

    def test_op_chain_gives_star(self):
        p3, _ = self.gen("path", 3)
        out = self.dir / "chain.el"
        meta = self.json_out("op", "op", "chain", f"{p3}:1:1", f"{p3}:1:1",
                             "-o", out)
        self.assertEqual(meta["merged"], [1])
        self.assertEqual(out.read_text(), "5 4\n0 1\n1 2\n1 3\n1 4\n")

    def test_op_bouquet_and_union(self):
        p2, _ = self.gen("path", 2)
        out = self.dir / "bouquet.el"
        meta = self.json_out("op", "op", "bouquet", f"{p2}:0", f"{p2}:0",
                             f"{p2}:0", "-o", out)
        self.assertEqual(meta["order"], 4)
        self.assertEqual(self.json_out("gamma-sp", "gamma-sp", out)["value"], 3)
        p3, _ = self.gen("path", 3)
        out = self.dir / "union.el"
        self.json_out("op", "op", "union", p3, p3, "-o", out)
        self.assertEqual(self.json_out("gamma-sp", "gamma-sp", out)["value"], 4)

    def test_op_errors(self):
        p3, _ = self.gen("path", 3)
        self.run_cli("op", "odot", p3, 3, expect=EXIT_USAGE)
        self.run_cli("op", "chain", f"{p3}:0", expect=EXIT_USAGE)
        self.run_cli("op", "twist", p3, expect=EXIT_USAGE)

    def verify(self, config, expect):
        report_path = self.dir / "report.json"
        summary = self.json_out("verify-summary", "verify", "--config", config,
                                "--out", report_path, expect=expect)
        report = json.loads(report_path.read_text())
        jsonschema.validate(report, schema("verify-report"))
        self.assertEqual(report["summary"], summary)
        return report

    def test_verify_empty_config(self):
        config = self.write("empty.json", "{}")
        report = self.verify(config, EXIT_OK)
        self.assertEqual(report["reports"], [])
        self.assertEqual(report["summary"]["total"],
                         {"holds": 0, "violated": 0, "skipped": 0})

    def test_verify_closed_forms_only(self):
        config = self.write("t2.json", json.dumps(
            {"theorems": ["T2i", "T2ii", "T2iii", "T2iv", "T2v"]}))
        report = self.verify(config, EXIT_OK)
        self.assertTrue(all(r["holds"] for r in report["reports"]))
        self.assertGreater(len(report["reports"]), 0)

    def test_verify_bad_config(self):
        config = self.write("bad.json", json.dumps({"theorems": ["T99"]}))
        self.run_cli("verify", "--config", config, expect=EXIT_USAGE)
        config = self.write("broken.json", "{")
        self.run_cli("verify", "--config", config, expect=EXIT_USAGE)

    # The domination leg of the sandwich bound fails on graphs that have an
    # edge and an isolated vertex; the default run reports exactly those.
    def test_verify_default(self):
        report = self.verify("default", EXIT_VIOLATED)
        failed = [r for r in report["reports"] if not r["holds"]]
        self.assertGreater(len(failed), 0)
        for r in failed:
            self.assertEqual(r["theorem_id"], "T1")
            bad = [leg["label"] for leg in r["legs"] if not leg["holds"]]
            self.assertEqual(bad, ["gamma <= n/2"])
            instance = r["instance"]
            args = [instance["family"], *map(str, instance["params"])]
            if instance["family"] == "gnp":
                args += [str(instance["p"]), str(instance["seed"])]
            graph = self.run_cli("gen", *args).stdout
            lines = graph.splitlines()
            n = int(lines[0].split()[0])
            degree = [0] * n
            for line in lines[1:]:
                u, v = map(int, line.split())
                degree[u] += 1
                degree[v] += 1
            self.assertIn(0, degree)
            self.assertGreater(sum(degree), 0)

    def test_byte_stable_output(self):
        path, _ = self.gen("gnp", 10, "1/2", 3)
        first = self.run_cli("gamma-sp", path).stdout
        second = self.run_cli("gamma-sp", path).stdout
        self.assertEqual(first, second)
        config = self.write("small.json", json.dumps(
            {"theorems": ["T2ii", "P_union", "T_odot"], "random": {"samples": 20},
             "union_pairs": 5}))
        outputs = []
        for name in ("a.json", "b.json"):
            self.run_cli("verify", "--config", config, "--out", self.dir / name)
            outputs.append((self.dir / name).read_bytes())
        self.assertEqual(outputs[0], outputs[1])


if __name__ == "__main__":
    BINARY = os.path.abspath(sys.argv[1])
    SCHEMAS = pathlib.Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
