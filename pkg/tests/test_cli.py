import json
from pathlib import Path
from typing import Callable

import pytest
from jordan_bider.__main__ import app
from jordan_bider.apps.algebras.catalog import catalog, diagonal_spin, idempotent_line
from jordan_bider.apps.algebras.models import JordanAlgebra
from jordan_bider.apps.linalg.fields import FieldSpec
from jordan_bider.apps.modules.models import JModule
from jordan_bider.apps.reports.claims import negated_unit_map
from jordan_bider.apps.reports.files import ModuleFile, parse_algebra, write_map
from typer.testing import CliRunner

runner = CliRunner()

CatalogFile = Callable[..., Path]


@pytest.fixture
def catalog_file(tmp_path: Path) -> CatalogFile:
    def build(name: str, *options: str, filename: str | None = None) -> Path:
        path = tmp_path / (filename or f"{name}.json")
        result = runner.invoke(app, ["catalog", name, *options, "--out", str(path)])
        assert result.exit_code == 0, result.output
        return path

    return build


def invoke(*args: str | Path):
    return runner.invoke(app, [str(a) for a in args])


def test_unknown_command():
    assert invoke("no-such-command").exit_code == 2


def test_catalog_to_stdout():
    result = invoke("catalog", "idempotent_line")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["dim"] == 1
    assert data["name"] == "idempotent_line"


@pytest.mark.parametrize("name", ["example_2_6", "perfect_commutative"])
def test_catalog_published_example(tmp_path: Path, name: str):
    path = tmp_path / "a_plus.json"
    result = invoke("catalog", name, "--out", path)
    assert result.exit_code == 0, result.output
    loaded = parse_algebra(path)
    assert loaded == catalog("example_2_6")
    assert loaded.name == "example_2_6"


def test_catalog_rejects_suffix(tmp_path: Path):
    result = invoke("catalog", "idempotent_line", "--out", tmp_path / "line.txt")
    assert result.exit_code == 2


def test_catalog_unknown_name():
    assert invoke("catalog", "octonions").exit_code == 2


def test_analyze_perfect_commutative(catalog_file: CatalogFile):
    result = invoke("analyze", catalog_file("example_2_6"))
    assert result.exit_code == 0, result.output
    assert "perfect: true" in result.stdout
    assert "center_dim: 0" in result.stdout
    assert "[MATCH] example_2_6: perfect: claimed true, computed true" in result.stdout


def test_analyze_reports_mismatch(catalog_file: CatalogFile):
    result = invoke("analyze", catalog_file("example_2_13_literal"))
    assert result.exit_code == 0, result.output
    assert (
        "[MISMATCH] example_2_13_literal: center dimension: claimed 1, computed 2" in result.stdout
    )


def test_non_jordan_needs_flag(catalog_file: CatalogFile):
    path = catalog_file("example_2_13_offdiag")
    assert invoke("analyze", path).exit_code == 1
    result = invoke("analyze", path, "--allow-non-jordan")
    assert result.exit_code == 0
    assert "jordan: false" in result.stdout


def test_missing_file(tmp_path: Path):
    assert invoke("analyze", tmp_path / "absent.json").exit_code == 2


def test_verify(catalog_file: CatalogFile):
    result = invoke("verify", catalog_file("example_2_13_offdiag"))
    assert result.exit_code == 0
    assert "commutative: true" in result.stdout
    assert "jordan_identity: false" in result.stdout


def test_verify_module(tmp_path: Path, catalog_file: CatalogFile):
    module = tmp_path / "module.json"
    ModuleFile.from_module(JModule.from_action(idempotent_line(), 1, [[[2]]])).to_path(module)
    result = invoke("verify", catalog_file("idempotent_line"), "--module", module)
    assert result.exit_code == 0
    assert "module: false" in result.stdout
    assert "failed: axiom_iii" in result.stdout


def test_bider_on_unital(catalog_file: CatalogFile):
    path = catalog_file("example_3_2", "--alpha", "1,1")
    result = invoke("bider", path, "--symmetric", "--condition1", "--centroid")
    assert result.exit_code == 0, result.output
    assert "dimension: 0" in result.stdout
    assert "dims_equal: true" in result.stdout
    assert "[MATCH]" in result.stdout


def test_bider_centroid_needs_perfect(catalog_file: CatalogFile):
    path = catalog_file("zero_product", "--n", "2")
    result = invoke("bider", path, "--symmetric", "--condition1", "--centroid")
    assert result.exit_code == 1
    assert "perfect" in result.output


def test_reduce(catalog_file: CatalogFile):
    path = catalog_file("example_2_13_offdiag")
    result = invoke("reduce", path, "--allow-non-jordan", "--quiet")
    assert result.exit_code == 0, result.output
    assert (
        "actions: [quotient_by_center, restrict_to_derived, terminate_centroid]"
        in result.stdout
    )
    assert "cross_check: true" in result.stdout


def test_triple_check_negated_unit(tmp_path: Path, catalog_file: CatalogFile):
    spin = catalog_file("example_3_2", "--alpha", "1,1")
    map_path = tmp_path / "negated.json"
    write_map(negated_unit_map(diagonal_spin([1, 1])), map_path)
    result = invoke("triple-check", map_path, spin, spin, "--delta")
    assert result.exit_code == 0, result.output
    assert "sign: minus" in result.stdout
    assert "is_hom: false" in result.stdout
    assert "delta_f:" in result.stdout
    assert "[MISMATCH]" not in result.stdout


def test_triple_reduce_non_perfect(algebra_path):
    # e o e = e plus a null direction n
    table = [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]
    j = JordanAlgebra.from_table(FieldSpec.prime(5), table, labels=("e", "n"), name="e_plus_n")
    path = algebra_path(j)
    result = invoke("triple-reduce", path, path, "--quiet")
    assert result.exit_code == 0, result.output
    assert "actions: [restrict_to_second_derived, terminate_perfect]" in result.stdout
    assert "triple_homs: [15, 3]" in result.stdout
    assert "consistent: true" in result.stdout
    assert "complete: true" in result.stdout


def test_triple_reduce_depth_option(catalog_file: CatalogFile):
    path = catalog_file("idempotent_line")
    assert invoke("triple-reduce", path, path, "--max-depth", "0").exit_code == 2


def test_triple_enumerate_budget(catalog_file: CatalogFile):
    spin = catalog_file("example_3_2", "--alpha", "1", "--prime", "5")
    result = invoke("triple-enumerate", spin, spin, "--budget", "10", "--quiet")
    assert result.exit_code == 1


def test_triple_enumerate_structured_is_deterministic(tmp_path: Path, catalog_file: CatalogFile):
    spin = catalog_file("example_3_2", "--alpha", "1", "--prime", "5")
    outputs = []
    for name in ("first.json", "second.json"):
        out = tmp_path / name
        result = invoke(
            "triple-enumerate", spin, spin, "--quiet", "--format", "structured", "--out", out
        )
        assert result.exit_code == 0, result.output
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    report = json.loads(outputs[0])
    assert report["command"] == "triple-enumerate"
    assert report["summary"]["total"] == 25
    assert report["summary"]["signs"]["mixed"] == 8
