"""
Driving the command line
========================

The ``finhoop`` console script works on JSON hoop documents.  This walks a
decomposition from file to certificate to offline re-check.
"""
import subprocess
import sys
import tempfile
from pathlib import Path

from finhoop import io, mv_chain, ordinal_sum

tmp = Path(tempfile.mkdtemp())
io.write_hoop(ordinal_sum(mv_chain(3), mv_chain(2)), tmp / "h.hoop")
print((tmp / "h.hoop").read_text())


def finhoop(*args):
    r = subprocess.run([sys.executable, "-m", "finhoop", *map(str, args)],
                       capture_output=True, text=True)
    print("$ finhoop", *args, f"-> exit {r.returncode}")
    print(r.stdout.rstrip())


finhoop("validate", tmp / "h.hoop")
finhoop("info", tmp / "h.hoop")
finhoop("decompose", tmp / "h.hoop", "-o", tmp / "h.cert")
finhoop("verify-cert", tmp / "h.hoop", tmp / "h.cert")
finhoop("export-dot", tmp / "h.hoop")
