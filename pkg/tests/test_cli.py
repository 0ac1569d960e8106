import io

import numpy as np
import pytest

from hadamard6.catalog import bn_circulant_witness, dita_D, generalized_fourier
from hadamard6.cli import run
from hadamard6.family import FamilyVariant, all_variants, h_block_from_alpha, x6_from_alpha
from hadamard6.linalg import load_matrix, max_entry_dist, parse_matrix, save_matrix
from hadamard6.region import region_csv, sample_region
from hadamard6.zauner import mub_from_alpha


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_construct_matches_library():
    code, out, _ = call(["construct", "--alpha", "1,0"])
    assert code == 0
    assert out.startswith("# hadamard_residual ")
    assert float(out.split()[2]) <= 1e-9
    assert max_entry_dist(parse_matrix(out), x6_from_alpha(1)) == 0


def test_construct_variants(tmp_path):
    code, out, _ = call(["construct", "--alpha", "-0.2,0.3", "--transpose"])
    assert max_entry_dist(parse_matrix(out), x6_from_alpha(-0.2 + 0.3j, FamilyVariant.TRANSPOSE)) == 0
    path = tmp_path / "h.mat"
    code, out, _ = call(["construct", "--alpha", "0,0.5", "--block", "-o", str(path)])
    assert code == 0 and out == ""
    assert max_entry_dist(load_matrix(path), h_block_from_alpha(0.5j)) == 0


def test_construct_outside_region():
    code, out, err = call(["construct", "--alpha", "3,0"])
    assert code == 2
    assert out == ""
    assert "alpha outside region: D[-a]=432.0" in err


@pytest.mark.parametrize("argv", [
    ["construct"],
    ["construct", "--alpha", "1"],
    ["construct", "--alpha", "a,b"],
    ["frobnicate"],
    ["construct", "--alpha", "0,0", "--bogus"],
    ["catalog", "--name", "nope"],
    ["catalog", "--name", "dita_d", "--params", "1,2"],
    ["catalog", "--name", "fourier", "--witness"],
    ["region", "--bounds", "1,0,0,1", "--grid", "3,3"],
])
def test_usage_errors(argv):
    code, out, err = call(argv)
    assert code == 1
    assert out == "" and err


def test_io_errors(tmp_path):
    code, _, err = call(["verify", "-i", str(tmp_path / "missing.mat")])
    assert code == 3
    bad = tmp_path / "bad.mat"
    bad.write_text("2 2\n1 0 1 0\n1 0\n")
    code, _, err = call(["verify", "-i", str(bad)])
    assert code == 3 and "line 3" in err


def test_verify(tmp_path):
    p = tmp_path / "x.mat"
    save_matrix(x6_from_alpha(-1), p)
    code, out, _ = call(["verify", "-i", str(p)])
    assert code == 0
    assert "hadamard yes" in out and "self_adjoint yes" in out
    save_matrix(np.ones((6, 6)), p)
    code, out, _ = call(["verify", "-i", str(p)])
    assert code == 2 and "hadamard no" in out


def test_region_csv(tmp_path):
    p = tmp_path / "r.csv"
    code, _, _ = call(["region", "--bounds", "-1,1,-1,1", "--grid", "5,4", "-o", str(p)])
    assert code == 0
    assert p.read_text() == region_csv(sample_region(-1, 1, -1, 1, 5, 4))


def test_equiv_d6(tmp_path):
    a, b = tmp_path / "x6_1.mat", tmp_path / "d1.mat"
    save_matrix(x6_from_alpha(1), a)
    save_matrix(dita_D(1), b)
    code, out, _ = call(["equiv", "-a", str(a), "-b", str(b)])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "EQUIVALENT"
    rp = [int(t) for t in lines[1].split()[1:]]
    cp = [int(t) for t in lines[2].split()[1:]]
    left = parse_matrix("\n".join(lines[3:6])).ravel()
    right = parse_matrix("\n".join(lines[6:9])).ravel()
    rebuilt = left[:, None] * dita_D(1)[np.ix_(rp, cp)] * right[None, :]
    assert max_entry_dist(rebuilt, x6_from_alpha(1)) <= 1e-7


def test_equiv_inequivalent(tmp_path):
    a, b = tmp_path / "a.mat", tmp_path / "b.mat"
    save_matrix(x6_from_alpha(0.5j), a)
    save_matrix(x6_from_alpha(0.5j).T, b)
    code, out, _ = call(["equiv", "-a", str(a), "-b", str(b), "--tol", "1e-7"])
    assert code == 0 and out == "INEQUIVALENT at tol=1e-07\n"


def test_catalog_outputs():
    code, out, _ = call(["catalog", "--name", "gfourier", "--params", "0.5,-1"])
    assert max_entry_dist(parse_matrix(out), generalized_fourier(0.5, -1)) == 0
    code, out, _ = call(["catalog", "--name", "bn_b", "--params", "0.1,-0.2,3", "--witness"])
    assert code == 0
    w = bn_circulant_witness(*np.exp(1j * np.array([0.1, -0.2, 3])))
    expected = out.split("# expected\n")[1]
    assert max_entry_dist(parse_matrix(expected), w.expected) == 0
    assert "row_perm 0 2 4 1 3 5" in out


def test_mub(tmp_path):
    prefix = str(tmp_path / "run_")
    code, out, _ = call(["mub", "--alpha", "0.3,0.2", "-o", prefix])
    assert code == 0
    t = mub_from_alpha(0.3 + 0.2j)
    assert max_entry_dist(load_matrix(prefix + "z1.mat"), t.z1) == 0
    assert max_entry_dist(load_matrix(prefix + "z2.mat"), t.z2) == 0
    assert "unbiased Z1-Z2:" in out
    assert call(["mub", "--alpha", "3,0", "-o", prefix])[0] == 2


@pytest.mark.slow
def test_variants(tmp_path):
    code, out, _ = call(["variants", "--alpha", "0,0.5", "-o", str(tmp_path)])
    assert code == 0
    assert len(list(tmp_path.glob("variant_*.mat"))) == 36
    assert max_entry_dist(load_matrix(tmp_path / "variant_07.mat"), all_variants(0.5j)[7]) == 0
    classes = [l for l in out.splitlines() if l.startswith("class ")]
    assert len(classes) == 2
    assert classes[0].startswith("class standard:") and classes[1].startswith("class transpose:")
    assert sum(len(l.split(":")[1].split()) for l in classes) == 36


def test_deterministic_output():
    first = call(["construct", "--alpha", "0.1,-0.4"])
    second = call(["construct", "--alpha", "0.1,-0.4"])
    assert first == second
    assert call(["catalog", "--name", "dita_d", "--params", "0.3", "--witness"]) == \
        call(["catalog", "--name", "dita_d", "--params", "0.3", "--witness"])


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "hadamard6", "construct", "--alpha", "0,0"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == call(["construct", "--alpha", "0,0"])[1]
