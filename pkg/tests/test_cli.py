import io
import json
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest

import rhizalab
from rhizalab.algmodel import HomAlgebra, serialize_algebra, sum_product
from rhizalab.catalog import load_entry
from rhizalab.cli import OPERATION_COVERAGE, build_parser, main

F = Fraction


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture()
def a7_file(tmp_path):
    path = tmp_path / "a7.json"
    path.write_text(serialize_algebra(load_entry("d2.A7")))
    return str(path)


@pytest.fixture()
def a1_file(tmp_path):
    path = tmp_path / "a1.json"
    path.write_text(serialize_algebra(load_entry("d2.A1")))
    return str(path)


@pytest.fixture()
def a1_sum_file(tmp_path):
    a = load_entry("d2.A1")
    path = tmp_path / "a1sum.json"
    path.write_text(serialize_algebra(HomAlgebra.mono(sum_product(a), a.alpha)))
    return str(path)


def test_check_rhizaform_pass(a7_file):
    code, out, err = run_cli("check", "--kind", "rhizaform", a7_file)
    assert code == 0
    assert "pass" in out


def test_check_strict_failure_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(
        '{"dim": 2, "kind": "mono", "alpha": [["1","0"],["0","1"]], "mul": [[1,1,1,"1"]]}'
    )
    code, out, _ = run_cli("check", "--kind", "anti-associative", "--strict", str(bad))
    assert code == 1
    assert "FAIL" in out
    # same run without --strict reports but exits 0
    code2, _, _ = run_cli("check", "--kind", "anti-associative", str(bad))
    assert code2 == 0


def test_check_with_oracle(a7_file):
    code, out, _ = run_cli("check", "--kind", "rhizaform", "--oracle", a7_file)
    assert code == 0


def test_check_missing_file_exits_2():
    code, _, err = run_cli("check", "--kind", "rhizaform", "/nonexistent.json")
    assert code == 2
    assert "error" in err


def test_check_bad_json_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _, err = run_cli("check", "--kind", "rhizaform", str(bad))
    assert code == 2


def test_usage_error_exits_2():
    code, _, _ = run_cli("check", "--kind", "made-up", "x.json")
    assert code == 2


def test_cocycles_vector_dimension(a1_file):
    code, out, _ = run_cli("cocycles", "--vector", "--format", "structured", a1_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 2


def test_cocycles_scalar(a1_sum_file):
    code, out, _ = run_cli("cocycles", "--scalar", "--format", "structured", a1_sum_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 1
    assert doc["basis"][0]["nondegenerate"] is False


def test_nilpotency_report(a1_file):
    code, out, _ = run_cli("nilpotency", "--format", "structured", a1_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["nilpotent"]["full"] == {"nilpotent": True, "index": 3}
    assert doc["series_equality"]["passed"] is True


def test_induce_sum_and_check_roundtrip(a1_file, tmp_path):
    code, out, _ = run_cli("induce", "--what", "sum", "--format", "structured", a1_file)
    assert code == 0
    doc = json.loads(out)
    target = tmp_path / "sum.json"
    target.write_text(json.dumps(doc["algebra"]))
    code2, out2, _ = run_cli("check", "--kind", "anti-associative", str(target))
    assert code2 == 0
    assert "pass" in out2


def test_induce_rb_flow(a1_sum_file, tmp_path):
    op = tmp_path / "r.json"
    op.write_text('{"T": [["0", "0"], ["0", "0"]]}')
    code, out, _ = run_cli(
        "induce", "--what", "rb", "--operator", str(op), "--format", "structured", a1_sum_file
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["algebra"]["kind"] == "rhizaform"


def test_induce_strict_rejects_bad_operator(a1_sum_file, tmp_path):
    op = tmp_path / "r.json"
    op.write_text('{"T": [["1", "0"], ["0", "1"]]}')
    code, _, err = run_cli("induce", "--what", "rb", "--operator", str(op), a1_sum_file)
    assert code == 2
    assert "error" in err
    code2, _, _ = run_cli(
        "induce", "--what", "rb", "--operator", str(op), "--no-strict", a1_sum_file
    )
    assert code2 == 0


def test_induce_bimodule_and_dual(a1_sum_file, tmp_path):
    code, out, _ = run_cli(
        "induce", "--what", "regular-bimodule", "--format", "structured", a1_sum_file
    )
    assert code == 0
    bim = tmp_path / "bim.json"
    bim.write_text(json.dumps(json.loads(out)["bimodule"]))
    code2, out2, _ = run_cli(
        "check", "--kind", "bimodule", "--bimodule", str(bim), a1_sum_file
    )
    assert code2 == 0 and "pass" in out2
    code3, out3, _ = run_cli(
        "induce", "--what", "dual-bimodule", "--bimodule", str(bim), "--format", "structured", a1_sum_file
    )
    assert code3 == 0
    assert "bimodule" in json.loads(out3)


def test_induce_inner_derivation(a1_file):
    code, out, _ = run_cli(
        "induce", "--what", "inner-derivation", "--z", "0,1", "--convention", "mixed",
        "--format", "structured", a1_file,
    )
    assert code == 0
    assert json.loads(out)["D"] == [["0", "0"], ["0", "0"]]


def test_family_subcommand(tmp_path, a1_sum_file):
    fam = {
        "dim": 2,
        "omega": {"size": 2, "table": [[0, 1], [1, 0]]},
        "alpha": [["1", "1"], ["0", "1"]],
        "succ": {"0": [[2, 2, 1, "1"]], "1": [[2, 2, 1, "1"]]},
        "prec": {"0": [[2, 2, 1, "1"]], "1": [[2, 2, 1, "1"]]},
    }
    fam_path = tmp_path / "fam.json"
    fam_path.write_text(json.dumps(fam))
    code, out, _ = run_cli("family", "--do", "check", str(fam_path))
    assert code == 0 and "pass" in out
    code2, _, _ = run_cli("family", "--do", "check-semigroup", str(fam_path))
    assert code2 == 0

    rbfam = {
        "omega": {"size": 2, "table": [[0, 1], [1, 0]]},
        "operators": {"0": [["0", "0"], ["0", "0"]], "1": [["0", "0"], ["0", "0"]]},
    }
    rb_path = tmp_path / "rbfam.json"
    rb_path.write_text(json.dumps(rbfam))
    code3, _, _ = run_cli("family", "--do", "check-rb", "--algebra", a1_sum_file, str(rb_path))
    assert code3 == 0
    code4, out4, _ = run_cli(
        "family", "--do", "collapse", "--algebra", a1_sum_file, "--format", "structured", str(rb_path)
    )
    assert code4 == 0
    assert json.loads(out4)["algebra"]["dim"] == 4


def test_catalog_list_and_show():
    code, out, _ = run_cli("catalog", "list")
    assert code == 0
    assert len(out.strip().splitlines()) == 23
    code2, out2, _ = run_cli("catalog", "show", "--id", "d2.A7", "--format", "structured")
    assert code2 == 0
    doc = json.loads(out2)
    assert doc["id"] == "d2.A7" and doc["tag"] == "m"


def test_catalog_verify_dim2():
    code, out, _ = run_cli("catalog", "verify", "--dim", "2", "--param", "eta=1")
    assert code == 0
    body = [l for l in out.splitlines() if l.startswith("d2.")]
    assert len(body) == 7


def test_catalog_verify_structured_byte_identical():
    runs = [
        run_cli("catalog", "verify", "--format", "structured", "--param", "eta=1/4")
        for _ in range(2)
    ]
    assert runs[0][0] == 0 and runs[1][0] == 0
    assert runs[0][1].encode() == runs[1][1].encode()


def test_catalog_verify_with_oracle_exits_zero():
    code, out, _ = run_cli("catalog", "verify", "--dim", "2", "--oracle", "--param", "eta=1")
    assert code == 0


def test_param_parsing_error():
    code, _, err = run_cli("catalog", "verify", "--param", "eta")
    assert code == 2


def test_every_public_operation_is_covered():
    """Audit: each public library operation maps to a CLI route."""
    public_ops = {
        "exactlin": ["rref", "nullspace_basis", "invert"],
        "algmodel": ["eval_product", "parse_algebra", "serialize_algebra", "sum_product"],
        "axioms": [
            "check_hom_anti_associative",
            "check_multiplicativity",
            "check_rhizaform",
            "check_dendriform",
            "check_jacobi_jordan",
            "check_pre_jacobi_jordan",
            "pre_jacobi_jordan_product",
            "subadjacent_bracket",
            "check_alpha_derivation",
            "inner_derivation",
        ],
        "operators": [
            "check_bimodule",
            "regular_bimodule",
            "rhizaform_bimodule",
            "dual_bimodule",
            "check_o_operator",
            "check_rota_baxter",
            "induced_rhizaform_from_o_operator",
            "induced_rhizaform_from_rb",
            "check_homomorphism",
            "compatible_from_invertible_o_operator",
        ],
        "cocycles": [
            "scalar_cocycle_space",
            "vector_cocycle_space",
            "is_nondegenerate",
            "rhizaform_from_cocycle",
        ],
        "nilpotency": [
            "diamond",
            "right_series",
            "left_series",
            "full_series",
            "is_nilpotent",
            "is_right_nilpotent",
            "is_left_nilpotent",
            "check_series_equality",
            "check_2_nilpotent",
            "check_onesided_nilpotency_theorem",
            "check_alpha_stability",
        ],
        "family": [
            "check_semigroup",
            "check_rhizaform_family",
            "check_anti_associative_family",
            "associated_family",
            "check_rb_family",
            "induced_family_rhizaform",
            "tensor_collapse",
        ],
        "catalog": ["load_entry", "verify_entry", "verify_all"],
    }
    expected_keys = {
        f"{module}.{op}" for module, ops in public_ops.items() for op in ops
    }
    assert expected_keys == set(OPERATION_COVERAGE)
    # every registered operation resolves to a real attribute
    import importlib

    for key in OPERATION_COVERAGE:
        module_name, op_name = key.split(".")
        mod = importlib.import_module(f"rhizalab.{module_name}")
        assert hasattr(mod, op_name), key


def test_coverage_routes_parse():
    """The documented example route for each operation names a real subcommand."""
    parser = build_parser()
    subcommands = {"check", "cocycles", "nilpotency", "induce", "family", "catalog"}
    for key, route in OPERATION_COVERAGE.items():
        assert route.split()[0] in subcommands, key


def test_remaining_check_routes(a7_file, a1_file, tmp_path):
    zero_op = tmp_path / "zero.json"
    zero_op.write_text('{"T": [["0", "0"], ["0", "0"]]}')
    code, out, _ = run_cli("check", "--kind", "multiplicativity", "--product", "succ", a7_file)
    assert code == 0 and "pass" in out
    code, out, _ = run_cli(
        "check", "--kind", "derivation", "--operator", str(zero_op), "--product", "succ", a7_file
    )
    assert code == 0 and "pass" in out
    code, out, _ = run_cli("check", "--kind", "jacobi-jordan", a7_file)
    assert code == 0
    code, out, _ = run_cli("check", "--kind", "pre-jacobi-jordan", a7_file)
    assert code == 0
    code, out, _ = run_cli("check", "--kind", "dendriform", a7_file)
    assert code == 0 and "pass" in out
    code, out, _ = run_cli(
        "check", "--kind", "homomorphism", "--operator", str(zero_op), "--target", a7_file, a7_file
    )
    assert code == 0 and "pass" in out


def test_remaining_induce_and_operator_routes(a1_file, a1_sum_file, tmp_path):
    code, out, _ = run_cli("induce", "--what", "pre-jacobi-jordan", "--format", "structured", a1_file)
    assert code == 0 and json.loads(out)["algebra"]["kind"] == "mono"
    code, out, _ = run_cli("induce", "--what", "bracket", "--format", "structured", a1_file)
    assert code == 0
    # split-action module of the split algebra, then the identity operator on it
    code, out, _ = run_cli(
        "induce", "--what", "rhizaform-bimodule", "--format", "structured", a1_file
    )
    assert code == 0
    bim = tmp_path / "bim.json"
    bim.write_text(json.dumps(json.loads(out)["bimodule"]))
    ident = tmp_path / "id.json"
    ident.write_text('{"T": [["1", "0"], ["0", "1"]]}')
    code, out, _ = run_cli(
        "check", "--kind", "o-operator", "--operator", str(ident), "--bimodule", str(bim), a1_sum_file
    )
    assert code == 0 and "pass" in out
    code, out, _ = run_cli(
        "check", "--kind", "rota-baxter", "--operator", str(ident), a1_sum_file
    )
    assert code == 0 and "FAIL" in out
    code, out, _ = run_cli(
        "induce", "--what", "o-operator", "--operator", str(ident), "--bimodule", str(bim),
        "--format", "structured", a1_sum_file,
    )
    assert code == 0
    code, out, _ = run_cli(
        "induce", "--what", "invertible-o", "--operator", str(ident), "--bimodule", str(bim),
        "--format", "structured", a1_sum_file,
    )
    assert code == 0
    # splitting from a nondegenerate form on the zero-product algebra
    zero_alg = tmp_path / "zero_alg.json"
    zero_alg.write_text('{"dim": 2, "kind": "mono", "alpha": [["1","0"],["0","1"]]}')
    form = tmp_path / "form.json"
    form.write_text('{"B": [["1", "0"], ["0", "1"]]}')
    code, out, _ = run_cli(
        "induce", "--what", "cocycle", "--form", str(form), "--format", "structured", str(zero_alg)
    )
    assert code == 0 and json.loads(out)["algebra"]["kind"] == "rhizaform"


def test_remaining_family_routes(tmp_path, a1_sum_file):
    fam = {
        "dim": 2,
        "omega": {"size": 1, "table": [[0]]},
        "alpha": [["1", "1"], ["0", "1"]],
        "succ": {"0": [[2, 2, 1, "1"]]},
        "prec": {"0": [[2, 2, 1, "1"]]},
    }
    fam_path = tmp_path / "fam1.json"
    fam_path.write_text(json.dumps(fam))
    code, out, _ = run_cli("family", "--do", "associated", "--format", "structured", str(fam_path))
    assert code == 0 and json.loads(out)["0,0"] == [[2, 2, 1, "2"]]
    code, out, _ = run_cli("family", "--do", "check-anti", str(fam_path))
    assert code == 0 and "pass" in out
    rbfam = {
        "omega": {"size": 1, "table": [[0]]},
        "operators": {"0": [["0", "0"], ["0", "0"]]},
    }
    rb_path = tmp_path / "rbfam1.json"
    rb_path.write_text(json.dumps(rbfam))
    code, out, _ = run_cli(
        "family", "--do", "induce", "--algebra", a1_sum_file, "--format", "structured", str(rb_path)
    )
    assert code == 0 and json.loads(out)["succ"]["0"] == []
