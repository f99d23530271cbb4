"""Exit codes, artifacts and cross-process determinism of the coxeter CLI,
and agreement between CLI and service reports."""

import json
import pathlib
import socket
import subprocess
import sys
import tempfile
import time
import urllib.request

binary = sys.argv[1]


def run(*args):
    return subprocess.run([binary, *args], capture_output=True, text=True)


def compute(*args):
    return run("compute", *args)


failures = []


def check(ok, what):
    if not ok:
        failures.append(what)
        print("FAILED:", what)


fig1 = ["--type", "A2", "--mode", "conjugacy_class", "-x", "0120102", "--bound", "5"]
r = compute(*fig1)
check(r.returncode == 0, "figure class exits 0")
check("s_12102102102  =  t_(-2,-3)*s_2" in r.stdout, "figure class report lists the element of 21021021020")

r = compute("--type", "A2", "--mode", "coconjugation", "-x", "0120102", "--bound", "5")
check(r.returncode == 2 and "missing_y" in r.stderr, "missing -y exits 2")
r = compute("--type", "A2", "--mode", "conjugacy_class", "-x", "0120102", "--bound", "16")
check(r.returncode == 2 and "bad_bound" in r.stderr, "--bound 16 exits 2")
r = compute("--type", "A2", "--mode", "conjugacy_class", "-x", "01x", "--bound", "2")
check(r.returncode == 2 and "parse_error" in r.stderr, "parse error exits 2")
r = compute("--type", "A3", "--mode", "conjugacy_class", "-x", "1", "--bound", "1", "--svg", "/dev/null")
check(r.returncode == 2, "SVG of a 3D type exits 2")
r = compute("--type", "A2")
check(r.returncode == 2, "missing required flags exit 2")
check(run("--help").returncode == 0, "--help exits 0")

with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    report = tmp / "empty.txt"
    r = compute("--type", "A2", "--mode", "coconjugation", "-x", "0120102", "-y", "1", "--bound", "3",
                "--report", str(report))
    check(r.returncode == 3, "empty coconjugation exits 3")
    check(report.exists() and "elements 0" in report.read_text(), "report written for an empty set")

    outputs = []
    for run_id in range(2):
        paths = [tmp / f"{run_id}.{ext}" for ext in ("txt", "svg", "json")]
        r = compute("--type", "C2", "--mode", "coconjugation", "-x", "201210121", "-y", "12012101211",
                    "--bound", "5", "--report", str(paths[0]), "--svg", str(paths[1]), "--json", str(paths[2]))
        check(r.returncode == 0, "coconjugation run exits 0")
        outputs.append([p.read_bytes() for p in paths])
    check(outputs[0] == outputs[1], "two CLI runs give byte-identical artifacts")
    check(json.loads(outputs[0][2])["report"] == outputs[0][0].decode(), "scene JSON embeds the report")

# the service must produce the same report text
with socket.socket() as s:
    s.bind(("127.0.0.1", 0))
    port = s.getsockname()[1]
server = subprocess.Popen([binary, "serve", "--port", str(port)], stderr=subprocess.DEVNULL)
try:
    for _ in range(100):
        try:
            socket.create_connection(("127.0.0.1", port), timeout=0.1).close()
            break
        except OSError:
            time.sleep(0.05)
    body = json.dumps({"type": "A2", "mode": "conjugacy_class", "x": "0120102", "bound": 5}).encode()
    req = urllib.request.Request(f"http://127.0.0.1:{port}/api/compute", data=body,
                                 headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(req, timeout=60) as resp:
        service_report = json.loads(resp.read())["report"]
    check(service_report == compute(*fig1).stdout, "CLI and service reports are identical")
finally:
    server.terminate()
    server.wait()

print("failures:", len(failures))
sys.exit(1 if failures else 0)
