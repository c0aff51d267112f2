import subprocess
import sys

import pytest

from cdgamma.io import read_colored, write_shelling
from cdgamma.shelling import builtin_shelling
from cli_util import cli, gen_file, golden

GOLDEN_NAMES = [f"simplex{n}" for n in range(2, 7)] + ["cube3", "crosspoly3"] + [
    f"polygon{m}" for m in range(3, 9)]


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_cdindex_golden(tmp_path, name):
    status, out, err = cli("cdindex", gen_file(tmp_path, name))
    assert status == 0 and err == ""
    assert out == golden(f"cdindex_{name}.txt")


def test_cdindex_example_text(tmp_path):
    status, out, _ = cli("cdindex", gen_file(tmp_path, "cube3"))
    assert out == "1*ccc + 6*dc + 4*cd\ndelta = 1,10\n"


def test_cdindex_witness(tmp_path):
    status, out, _ = cli("cdindex", "--witness", gen_file(tmp_path, "simplex4"))
    assert status == 0
    lines = out.splitlines()
    assert lines[2] == "ffk k=2 true" and lines[3] == "WITNESS"
    cc = read_colored("\n".join(lines[4:]))
    assert cc.f_vector() == [1, 11, 4] and cc.k == 2


def test_cdindex_tsv(tmp_path):
    status, out, _ = cli("--format", "tsv", "cdindex", gen_file(tmp_path, "cube3"))
    assert out == "phi\t1*ccc + 6*dc + 4*cd\ndelta\t1,10\n"


def test_cdindex_not_eulerian(tmp_path):
    path = tmp_path / "chain.poset"
    path.write_text("poset chain\ncover bot x\ncover x top\n")
    status, out, _ = cli("cdindex", path)
    assert status == 1 and out.startswith("NOT_EULERIAN")


@pytest.mark.parametrize("args,expected,code", [
    (("screen5", "1,6,7"), "screen5_1_6_7.txt", 1),
    (("screen5", "1,8,14"), "screen5_1_8_14.txt", 1),
    (("screen5", "1,4,4"), "screen5_1_4_4.txt", 0),
    (("ffk", "1,3,1", "2"), "ffk_1_3_1_k2.txt", 0),
])
def test_verb_goldens(args, expected, code):
    status, out, _ = cli(*args)
    assert status == code
    assert out == golden(expected)


def test_ffk_false():
    assert cli("ffk", "1,1,1", "2") == (1, "false\n", "")


def test_screen5_bad_shape():
    status, _, err = cli("screen5", "1,2")
    assert status == 2 and err.startswith("error BadShape")


def test_gamma(tmp_path):
    status, out, _ = cli("gamma", gen_file(tmp_path, "cube3"))
    assert status == 0
    assert out == "h = 1,23,23,1\ngamma = 1,20\n2^i*delta = 1,20\nmatch = true\n"


def test_flags(tmp_path):
    status, out, _ = cli("flags", gen_file(tmp_path, "polygon3"))
    assert status == 0
    assert out.splitlines()[:5] == ["flag_f", "S=empty value=1", "S=1 value=3",
                                    "S=2 value=3", "S=1,2 value=6"]
    status, out, _ = cli("--format", "tsv", "flags", gen_file(tmp_path, "polygon3"))
    assert out.splitlines()[-1] == "1,2\t6\t1"


def test_gen_join_and_suspension(tmp_path):
    sq = gen_file(tmp_path, "polygon4")
    status, text, _ = cli("gen", "join", sq, sq)
    assert status == 0
    joined = tmp_path / "j.poset"
    joined.write_text(text)
    _, out, _ = cli("cdindex", joined)
    assert out == "1*cccc + 2*dcc + 2*ccd + 4*dd\ndelta = 1,4,4\n"
    status, text, _ = cli("gen", "suspension", sq)
    s = tmp_path / "s.poset"
    s.write_text(text)
    _, out, _ = cli("cdindex", s)
    assert out.splitlines()[0] == "1*ccc + 2*dc"


@pytest.mark.parametrize("kind,n", [("cube", 3), ("simplex", 4), ("polygon", 5)])
def test_shell(tmp_path, kind, n):
    so = builtin_shelling(kind, n)
    poset = gen_file(tmp_path, f"{kind}{n}")
    order = tmp_path / "order.txt"
    order.write_text(write_shelling(so))
    status, out, _ = cli("shell", poset, order)
    assert status == 0
    lines = out.splitlines()
    assert sum(ln.startswith("stanley") for ln in lines) == so.r - 2
    assert sum(ln.startswith("bound") for ln in lines) == max(so.r - 3, 0)
    assert "FAIL" not in out
    tele = next(ln for ln in lines if ln.startswith("telescoped"))
    direct = next(ln for ln in lines if ln.startswith("direct"))
    assert tele.split(" = ")[1] == direct.split(" = ")[1]


def test_conjecture(tmp_path):
    status, out, _ = cli("conjecture", gen_file(tmp_path, "simplex4"))
    assert status == 0 and out.startswith("WITNESS\n")
    cc = read_colored(out.split("\n", 1)[1])
    assert cc.f_vector() == [1, 11, 4] and cc.k == 3


def test_conjecture_budget(tmp_path):
    status, out, _ = cli("conjecture", gen_file(tmp_path, "simplex5"), "1")
    assert (status, out) == (1, "INCONCLUSIVE budget\n")
    status, out, _ = cli("--budget", "1", "conjecture", gen_file(tmp_path, "simplex5"))
    assert (status, out) == (1, "INCONCLUSIVE budget\n")


@pytest.mark.parametrize("argv", [(), ("bogus",), ("gen", "cube"), ("gen", "cube", "x"),
                                  ("ffk", "1,2"), ("gen", "prism", "3")])
def test_usage_errors(argv):
    status, out, err = cli(*argv)
    assert status == 2 and out == "" and err.startswith("usage error")


def test_missing_file():
    status, _, err = cli("cdindex", "/nonexistent/file.poset")
    assert status == 2 and "cannot read" in err


def test_malformed_poset(tmp_path):
    path = tmp_path / "bad.poset"
    path.write_text("poset bad\ncover bot x\ncover bot y\ncover x top\ncover y top\ncover bot top\n")
    status, _, err = cli("cdindex", path)
    assert status == 2 and err.startswith("error NotGraded")
    path.write_text("cover a\n")
    status, _, err = cli("flags", path)
    assert status == 2 and err.startswith("error Parse")


def test_repeated_runs_are_identical(tmp_path):
    p = gen_file(tmp_path, "crosspoly3")
    first = [cli(*a) for a in (("cdindex", "--witness", p), ("flags", p), ("conjecture", p))]
    second = [cli(*a) for a in (("cdindex", "--witness", p), ("flags", p), ("conjecture", p))]
    assert first == second
    assert cli("gen", "cube", "4") == cli("gen", "cube", "4")


def test_jobs_flag_gives_same_output(tmp_path):
    p = gen_file(tmp_path, "simplex5")
    assert cli("--jobs", "3", "cdindex", p) == cli("cdindex", p)


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "cdgamma", "ffk", "1,3,1", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "true\n"


def test_output_independent_of_hash_seed(tmp_path):
    p = gen_file(tmp_path, "crosspoly3")
    outs = set()
    for seed in ("0", "1", "12345"):
        env = {"PYTHONHASHSEED": seed, "PATH": "/usr/bin:/bin"}
        runs = []
        for argv in (("gen", "crosspoly", "3"), ("cdindex", "--witness", p), ("flags", p),
                     ("conjecture", p)):
            res = subprocess.run([sys.executable, "-m", "cdgamma", *map(str, argv)],
                                 capture_output=True, env=env)
            runs.append(res.stdout)
        outs.add(tuple(runs))
    assert len(outs) == 1
