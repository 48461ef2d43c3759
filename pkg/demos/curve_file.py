"""
Reading a curve from a description file and writing the JSON report
===================================================================
"""

import tempfile
from pathlib import Path

from galoispoints.cli import cmd_bounds
from galoispoints.curvefile import load_curve
from galoispoints.report import RunConfig, dumps

text = """\
# the degree-five Fermat curve over GF(2)
field 2 1
implicit X^5 + Y^5 + Z^5
genus 6
"""

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "fermat5.txt"
    path.write_text(text)
    C = load_curve(path)
    config = RunConfig("bounds", {"file": str(path)}, k_max=4, search_k=8)
    report, code = cmd_bounds(config, C)

print("exit code", code)
print(dumps(report)[:600], "...")
print("delta =", report["survey"]["delta"], " bound =", report["bounds"][0]["rhs"])
