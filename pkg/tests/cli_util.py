import io
import re
from pathlib import Path

from cdgamma.cli import run

GOLDEN = Path(__file__).parent / "golden"


def cli(*argv):
    """Run the command line in-process; return ``(status, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    status = run([str(a) for a in argv], out, err)
    return status, out.getvalue(), err.getvalue()


def gen_file(tmp_path, spec):
    """Write ``gen`` output for a golden name such as ``cube3`` and return the path."""
    kind, n = re.fullmatch(r"([a-z]+)(\d+)", spec).groups()
    status, text, _ = cli("gen", kind, n)
    assert status == 0
    path = tmp_path / f"{spec}.poset"
    path.write_text(text, encoding="utf-8")
    return path


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")
