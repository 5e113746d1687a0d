import json
from pathlib import Path
from typing import Any, Callable

import pytest
from jordan_bider.apps.algebras.catalog import diagonal_spin, idempotent_line
from jordan_bider.apps.algebras.models import JordanAlgebra
from jordan_bider.apps.linalg.fields import FieldSpec
from jordan_bider.apps.reports.files import write_algebra


@pytest.fixture
def rationals() -> FieldSpec:
    return FieldSpec.rational()


@pytest.fixture
def gf5() -> FieldSpec:
    return FieldSpec.prime(5)


@pytest.fixture
def spin11() -> JordanAlgebra:
    """
    1, u1, u2 with u_i o u_i = 1.
    """
    return diagonal_spin([1, 1])


@pytest.fixture
def line5(gf5: FieldSpec) -> JordanAlgebra:
    return idempotent_line(gf5)


@pytest.fixture
def spin5(gf5: FieldSpec) -> JordanAlgebra:
    return diagonal_spin([1], gf5)


@pytest.fixture
def algebra_path(tmp_path: Path) -> Callable[[JordanAlgebra], Path]:
    def write(j: JordanAlgebra, name: str | None = None) -> Path:
        path = tmp_path / f"{name or j.name or 'algebra'}.json"
        write_algebra(j, path)
        return path

    return write


@pytest.fixture
def json_path(tmp_path: Path) -> Callable[[str, Any], Path]:
    def write(name: str, data: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path

    return write
