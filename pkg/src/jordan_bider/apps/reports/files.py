"""
On-disk formats for algebras, modules, linear maps and bilinear maps.

Files are JSON (or YAML) documents. Rationals are written as "num/den"
strings, prime-field values as integers in [0, p).
"""
from __future__ import annotations

from pathlib import Path
from typing import Any, Sequence, TypeVar

from pydantic import ValidationError
from ruamel.yaml.error import YAMLError

from ...helpers.data.models import ProjectBaseModel, StashableBase, dump_scalar
from ...internal.errors import InputError
from ..algebras.models import JordanAlgebra, Table, default_labels
from ..biderivations.models import BilinearMap
from ..linalg.fields import FieldSpec
from ..linalg.maps import LinearMap
from ..modules.models import JModule

RawScalar = int | str
RawTable = list[list[list[RawScalar]]]

FileType = TypeVar("FileType", bound=StashableBase)


def _describe(e: ValidationError) -> str:
    parts = []
    for error in e.errors():
        location = ".".join(str(part) for part in error["loc"]) or "document"
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)


def load_file(cls: type[FileType], path: Path) -> FileType:
    if not path.exists():
        raise InputError(f"{path} does not exist")
    try:
        return cls.from_path(path)
    except ValidationError as e:
        raise InputError(f"{path}: {_describe(e)}") from e
    except YAMLError as e:
        raise InputError(f"{path}: {e}") from e
    except ValueError as e:
        # json.JSONDecodeError carries the line and column
        raise InputError(f"{path}: {e}") from e


def _scalars(field: FieldSpec, values: Sequence[RawScalar], where: str) -> tuple[Any, ...]:
    try:
        return field.vector(values)
    except InputError as e:
        raise InputError(f"{where}: {e}") from e


def _table(field: FieldSpec, raw: RawTable, rows: int, cols: int, width: int, name: str) -> Table:
    if len(raw) != rows:
        raise InputError(f"{name} has {len(raw)} rows, expected {rows}")
    out = []
    for i, row in enumerate(raw):
        if len(row) != cols:
            raise InputError(f"{name}[{i}] has {len(row)} entries, expected {cols}")
        entries = []
        for k, entry in enumerate(row):
            if len(entry) != width:
                raise InputError(
                    f"{name}[{i}][{k}] has {len(entry)} coefficients, expected {width}"
                )
            entries.append(_scalars(field, entry, f"{name}[{i}][{k}]"))
        out.append(tuple(entries))
    return tuple(out)


def _dump_table(table: Table) -> RawTable:
    return [[[dump_scalar(a) for a in entry] for entry in row] for row in table]


def _commutativity_error(table: Table, labels: Sequence[str]) -> str | None:
    n = len(table)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if table[i][j][k] != table[j][i][k]:
                    return (
                        f"table is not commutative at (i, j, k) = ({i}, {j}, {k}): "
                        f"{labels[i]} o {labels[j]} and {labels[j]} o {labels[i]} "
                        f"differ in the coefficient of {labels[k]}"
                    )
    return None


class AlgebraFile(ProjectBaseModel):
    field: FieldSpec = FieldSpec.rational()
    dim: int
    basis: list[str] | None = None
    table: RawTable
    name: str | None = None

    def to_algebra(self) -> JordanAlgebra:
        if self.dim < 0:
            raise InputError(f"dim must be non-negative, got {self.dim}")
        labels = tuple(self.basis) if self.basis else default_labels("e", self.dim)
        if len(labels) != self.dim:
            raise InputError(f"expected {self.dim} basis labels, got {len(labels)}")
        table = _table(self.field, self.table, self.dim, self.dim, self.dim, "table")
        error = _commutativity_error(table, labels)
        if error:
            raise InputError(error)
        return JordanAlgebra(
            field=self.field,
            dim=self.dim,
            basis_labels=labels,
            table=table,
            name=self.name,
        )

    @classmethod
    def from_algebra(cls, j: JordanAlgebra) -> AlgebraFile:
        return cls(
            field=j.field,
            dim=j.dim,
            basis=list(j.basis_labels),
            table=_dump_table(j.table),
            name=j.name,
        )


class ModuleFile(ProjectBaseModel):
    """
    action[a][x] holds the coordinates of e_a . v_x.
    """

    dim: int
    action: RawTable

    def to_module(self, j: JordanAlgebra) -> JModule:
        action = _table(j.field, self.action, j.dim, self.dim, self.dim, "action")
        return JModule(algebra=j, dim=self.dim, action=action)

    @classmethod
    def from_module(cls, m: JModule) -> ModuleFile:
        return cls(dim=m.dim, action=_dump_table(m.action))


class MapFile(ProjectBaseModel):
    """
    Row i of ``matrix`` holds the coordinates of f(e_i).
    """

    source_dim: int
    target_dim: int
    matrix: list[list[RawScalar]]

    def to_map(self, field: FieldSpec) -> LinearMap:
        if len(self.matrix) != self.source_dim:
            raise InputError(f"matrix has {len(self.matrix)} rows, expected {self.source_dim}")
        images = []
        for i, row in enumerate(self.matrix):
            if len(row) != self.target_dim:
                raise InputError(
                    f"matrix[{i}] has {len(row)} entries, expected {self.target_dim}"
                )
            images.append(_scalars(field, row, f"matrix[{i}]"))
        return LinearMap(
            field=field,
            source_dim=self.source_dim,
            target_dim=self.target_dim,
            images=tuple(images),
        )

    @classmethod
    def from_map(cls, f: LinearMap) -> MapFile:
        return cls(
            source_dim=f.source_dim,
            target_dim=f.target_dim,
            matrix=[[dump_scalar(a) for a in image] for image in f.images],
        )


class BilinearMapFile(ProjectBaseModel):
    source_dim: int
    target_dim: int
    tensor: RawTable

    def to_bilinear(self, field: FieldSpec) -> BilinearMap:
        n = self.source_dim
        tensor = _table(field, self.tensor, n, n, self.target_dim, "tensor")
        return BilinearMap(field=field, source_dim=n, target_dim=self.target_dim, tensor=tensor)

    @classmethod
    def from_bilinear(cls, d: BilinearMap) -> BilinearMapFile:
        return cls(source_dim=d.source_dim, target_dim=d.target_dim, tensor=_dump_table(d.tensor))


def parse_algebra(path: Path) -> JordanAlgebra:
    """
    Read an algebra file. Commutativity is enforced here; the Jordan
    identity is left to ``verify_jordan`` so failing tables still load.
    """
    return load_file(AlgebraFile, path).to_algebra()


def parse_module(path: Path, j: JordanAlgebra) -> JModule:
    return load_file(ModuleFile, path).to_module(j)


def parse_map(path: Path, field: FieldSpec) -> LinearMap:
    return load_file(MapFile, path).to_map(field)


def parse_bilinear(path: Path, field: FieldSpec) -> BilinearMap:
    return load_file(BilinearMapFile, path).to_bilinear(field)


def write_algebra(j: JordanAlgebra, path: Path) -> None:
    AlgebraFile.from_algebra(j).to_path(path)


def write_map(f: LinearMap, path: Path) -> None:
    MapFile.from_map(f).to_path(path)
