from pathlib import Path
from typing import Any

import pytest
from jordan_bider.apps.algebras.catalog import catalog
from jordan_bider.apps.algebras.models import JordanAlgebra
from jordan_bider.apps.algebras.operations import find_unit, is_perfect, verify_jordan
from jordan_bider.apps.linalg.fields import FieldSpec
from jordan_bider.apps.reports.files import parse_algebra, write_algebra
from jordan_bider.internal.errors import InputError


class BaseCatalogTest:
    name: str
    options: dict[str, Any] = {}
    field: FieldSpec = FieldSpec.rational()
    dim: int
    jordan: bool = True
    perfect: bool = True
    unital: bool = True

    def build(self) -> JordanAlgebra:
        return catalog(self.name, self.field, **self.options)

    def test_structure(self):
        j = self.build()
        assert j.dim == self.dim, f"{self.name} should have dimension {self.dim}"
        assert j.field == self.field
        assert verify_jordan(j).passed == self.jordan
        assert is_perfect(j) == self.perfect
        assert (find_unit(j) is not None) == self.unital

    @pytest.mark.parametrize("suffix", [".json", ".yaml"])
    def test_file_round_trip(self, tmp_path: Path, suffix: str):
        j = self.build()
        path = tmp_path / f"{self.name}{suffix}"
        write_algebra(j, path)
        loaded = parse_algebra(path)
        assert loaded.field == j.field
        assert loaded.basis_labels == j.basis_labels
        assert loaded.table == j.table
        assert loaded.name == j.name


class TestMatrixJordan(BaseCatalogTest):
    name = "matrix_jordan"
    options = {"n": 2}
    dim = 4


class TestSymMatrixJordan(BaseCatalogTest):
    name = "sym_matrix_jordan"
    options = {"n": 2}
    dim = 3


class TestSymplecticJordan(BaseCatalogTest):
    name = "symplectic_jordan"
    options = {"n": 1}
    dim = 3


class TestSymplecticJordanBlocks(BaseCatalogTest):
    # X with S X symmetric, so 4 * 5 / 2
    name = "symplectic_jordan"
    options = {"n": 2}
    dim = 10


class TestSpinFactor(BaseCatalogTest):
    name = "spin_factor"
    options = {"form": "1 0; 0 -1"}
    dim = 3


class TestDiagonalSpin(BaseCatalogTest):
    name = "example_3_2"
    options = {"alpha": "1, 1/2"}
    dim = 3


class TestDiagonalSpinGF7(BaseCatalogTest):
    name = "diagonal_spin"
    options = {"alpha": "3, 6"}
    field = FieldSpec.prime(7)
    dim = 3


class TestPerfectCommutative(BaseCatalogTest):
    name = "example_2_6"
    dim = 3


class TestSumTableLiteral(BaseCatalogTest):
    name = "example_2_13_literal"
    dim = 3
    perfect = False
    unital = False


class TestSumTableOffdiag(BaseCatalogTest):
    name = "example_2_13_offdiag"
    dim = 3
    jordan = False
    perfect = False
    unital = False


class TestIdempotentLine(BaseCatalogTest):
    name = "idempotent_line"
    dim = 1


class TestZeroProduct(BaseCatalogTest):
    name = "zero_product"
    options = {"n": 2}
    dim = 2
    perfect = False
    unital = False


@pytest.mark.parametrize(
    "name, options",
    [
        ("no_such_algebra", {}),
        ("matrix_jordan", {}),
        ("matrix_jordan", {"n": 0}),
        ("example_3_2", {}),
        ("diagonal_spin", {"alpha": "1, 0"}),
        ("spin_factor", {"form": "1 2; 3 1"}),
        ("spin_factor", {"form": "1 0; 0"}),
    ],
)
def test_catalog_rejects(name: str, options: dict[str, Any]):
    with pytest.raises(InputError):
        catalog(name, **options)


@pytest.mark.parametrize(
    "alias, name, options",
    [
        ("perfect_commutative", "example_2_6", {}),
        ("sum_table_literal", "example_2_13_literal", {}),
        ("sum_table_offdiag", "example_2_13_offdiag", {}),
        ("diagonal_spin", "example_3_2", {"alpha": "1, 1"}),
    ],
)
def test_descriptive_aliases(alias: str, name: str, options: dict[str, Any]):
    j = catalog(alias, **options)
    assert j == catalog(name, **options)
    assert j.name == name, "aliases build the same tagged algebra"


def test_example_3_2_table():
    j = catalog("example_3_2", alpha="1, 1")
    one, u1, u2 = (j.basis_vector(i) for i in range(3))
    assert j.table[1][1] == one
    assert j.table[1][2] == j.field.zero_vector(3)
    assert j.table[0][1] == u1
    assert j.table[0][2] == u2
