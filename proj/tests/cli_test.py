"""End-to-end checks of the homflow command line: dispatch, exit codes,
report shape, and trace output."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]


def graph(n, edges, order=None):
    doc = {
        "signature": [{"name": "edge", "arity": 2, "symmetric": True}],
        "size": n,
        "relations": {"edge": [list(e) for e in edges]},
    }
    if order is not None:
        doc["linear_order"] = order
    return doc


def complete(n):
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], list(range(n)))


def run(*args, cwd):
    proc = subprocess.run([BIN, *args], cwd=cwd, capture_output=True, text=True)
    report = None
    if proc.stdout.strip():
        report = json.loads(proc.stdout)
    return proc.returncode, report, proc.stderr


def main():
    tmp = tempfile.mkdtemp(prefix="homflow_cli_")

    def write(name, doc):
        with open(os.path.join(tmp, name), "w") as f:
            json.dump(doc, f)

    for n in (1, 2, 3, 5, 6):
        write(f"k{n}.json", complete(n))
    # Unordered variants for the unordered class flags.
    for n in (1, 2, 3):
        write(f"uk{n}.json", graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)]))
    write("up3.json", graph(3, [(0, 1), (1, 2)]))
    write("chain3.json", {
        "signature": [], "size": 3, "relations": {},
        "partial_order": [[0, 1], [1, 2], [0, 2]],
        "linear_order": [0, 1, 2],
    })
    write("i01.json", [[0, 0]])
    write("j01.json", [[0, 1]])
    write("bad_map.json", [[0, 5]])

    # Dispatch examples with their pinned exit codes.
    rc, rep, _ = run("check-ramsey", "--C", "k6.json", "--B", "k3.json",
                     "--A", "k2.json", "--colors", "2", "--class", "graph",
                     "--ordered", cwd=tmp)
    assert rc == 0 and rep["verdict"] == "pass", (rc, rep)

    rc, rep, _ = run("check-ramsey", "--C", "k5.json", "--B", "k3.json",
                     "--A", "k2.json", "--colors", "2", "--class", "graph", cwd=tmp)
    assert rc == 1 and rep["verdict"] == "fail", (rc, rep)
    assert len(rep["witness"]["copies"]) == len(rep["witness"]["colors"]) == 10

    rc, rep, _ = run("check-ramsey", "--B", "uk3.json", "--A", "uk1.json",
                     "--colors", "2", "--class", "graph", "--search-bound", "5", cwd=tmp)
    assert rc == 0 and rep["verdict"] == "witness" and rep["witness"]["size"] == 5

    rc, rep, _ = run("flow", "--structure", "chain3.json", "--class", "poset",
                     "--minimal", cwd=tmp)
    assert rc == 0 and rep["witness"]["minimal"] is True and rep["witness"]["group_size"] == 1

    rc, rep, _ = run("flow", "--structure", "k3.json", "--class", "graph",
                     "--check-torder", "--orbit-of", "[2,0,1]", cwd=tmp)
    assert rc == 0 and rep["witness"]["torder"]["agreement"] is True
    assert len(rep["witness"]["orbit"]) == 6

    rc, rep, _ = run("amalgamate", "--A", "uk1.json", "--B", "uk2.json",
                     "--C", "uk2.json", "--i", "i01.json", "--j", "j01.json",
                     "--class", "graph", cwd=tmp)
    assert rc == 0 and rep["witness"]["D"]["size"] == 3
    k = dict(map(tuple, rep["witness"]["k"]))
    l = dict(map(tuple, rep["witness"]["l"]))
    assert k[0] == l[1]  # the glued point

    rc, _, err = run("amalgamate", "--A", "uk1.json", "--B", "uk2.json",
                     "--C", "uk2.json", "--i", "i01.json", "--j", "bad_map.json",
                     "--class", "graph", cwd=tmp)
    assert rc == 2 and "error" in err, (rc, err)

    rc, rep, _ = run("check-ordering-property", "--B", "uk2.json",
                     "--class", "graph", "--bound", "3", cwd=tmp)
    assert rc == 0 and rep["verdict"] == "witness" and rep["witness"]["size"] == 2

    rc, rep, _ = run("check-class", "--class", "poset", "--ordered",
                     "--bound", "3", cwd=tmp)
    assert rc == 0 and rep["verdict"] == "pass"
    assert set(rep["witness"]) >= {"hereditary", "jep", "amalgamation", "reasonable"}

    rc, rep, _ = run("check-ep", "--structure", "uk3.json", "--class", "graph",
                     "--bound", "3", cwd=tmp)
    assert rc == 0 and rep["witness"]["fail"] == 0

    rc, rep, _ = run("check-ep", "--structure", "up3.json", "--class", "graph",
                     "--bound", "2", cwd=tmp)
    assert rc == 1 and rep["witness"]["fail"] > 0 and rep["witness"]["failures"]

    trace = os.path.join(tmp, "trace")
    rc, rep, _ = run("build-limit", "--seed", "k2.json", "--class", "graph",
                     "--budget", "2", "--window", "1", "--trace", trace, cwd=tmp)
    assert rc == 0 and rep["witness"]["audit_ok"] is True
    sizes = rep["witness"]["stage_sizes"]
    assert sizes == sorted(sizes) and len(sizes) == rep["witness"]["steps"] + 1
    stages = sorted(f for f in os.listdir(trace) if f.startswith("stage_"))
    assert len(stages) == len(sizes)
    with open(os.path.join(trace, stages[-1])) as f:
        assert json.load(f)["size"] == sizes[-1]
    with open(os.path.join(trace, "psi_ledger.json")) as f:
        ledger = json.load(f)
    assert ledger and all(entry["psi"] for entry in ledger)

    # Hitting the stage-size cap reports exhaustion with exit 1.
    rc, rep, _ = run("build-limit", "--seed", "k2.json", "--class", "graph",
                     "--budget", "6", "--window", "1", cwd=tmp)
    assert rc == 1 and rep["witness"]["exhausted"] is True
    assert rep["witness"]["audit_ok"] is True

    # Determinism: identical reports modulo timing.
    reports = []
    for _ in range(2):
        rc, rep, _ = run("build-limit", "--seed", "k2.json", "--class", "graph",
                         "--budget", "2", "--window", "1", cwd=tmp)
        del rep["timing_ms"]
        reports.append(rep)
    assert reports[0] == reports[1]

    # Unknown subcommand and missing required options are usage errors.
    rc, _, err = run("no-such-command", cwd=tmp)
    assert rc == 2 and "Usage" in err
    rc, _, _ = run("check-ramsey", "--B", "k3.json", cwd=tmp)
    assert rc == 2

    print("cli_test: all checks passed")


if __name__ == "__main__":
    main()
