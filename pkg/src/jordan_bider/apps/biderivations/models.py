from __future__ import annotations

from typing import Any, Sequence

from pydantic import model_validator

from ...helpers.data.models import ExactModel, ProjectBaseModel, StrEnum, Vector
from ...internal.errors import InputError
from ..algebras.models import JordanAlgebra, Table, convert_table
from ..linalg.fields import FieldSpec
from ..linalg.maps import LinearMap
from ..linalg.matrices import Subspace
from ..linalg.vectors import combination


class BilinearMap(ExactModel):
    """
    delta(e_i, e_j) = sum_k tensor[i][j][k] v_k, from n x n into an m-dimensional space.
    """

    field: FieldSpec
    source_dim: int
    target_dim: int
    tensor: Table

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.tensor) != self.source_dim:
            raise ValueError(f"tensor has {len(self.tensor)} rows, expected {self.source_dim}")
        for i, row in enumerate(self.tensor):
            if len(row) != self.source_dim:
                raise ValueError(f"tensor row {i} has {len(row)} entries, expected {self.source_dim}")
            for j, entry in enumerate(row):
                if len(entry) != self.target_dim:
                    raise ValueError(
                        f"tensor entry ({i}, {j}) has {len(entry)} coefficients, expected {self.target_dim}"
                    )
        return self

    @classmethod
    def from_tensor(
        cls, field: FieldSpec, tensor: Sequence[Sequence[Sequence[Any]]], target_dim: int
    ) -> BilinearMap:
        return cls(
            field=field,
            source_dim=len(tensor),
            target_dim=target_dim,
            tensor=convert_table(field, tensor),
        )

    @classmethod
    def zero(cls, field: FieldSpec, source_dim: int, target_dim: int) -> BilinearMap:
        row = tuple(field.zero_vector(target_dim) for _ in range(source_dim))
        return cls(
            field=field,
            source_dim=source_dim,
            target_dim=target_dim,
            tensor=tuple(row for _ in range(source_dim)),
        )

    def value(self, i: int, j: int) -> Vector:
        return self.tensor[i][j]

    def evaluate(self, u: Sequence[Any], v: Sequence[Any]) -> Vector:
        """
        delta(u, v) by bilinear extension.
        """
        n = self.source_dim
        if len(u) != n or len(v) != n:
            raise InputError(f"arguments must have length {n}")
        coefficients = []
        values = []
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    coefficients.append(a * b)
                    values.append(self.tensor[i][j])
        return combination(coefficients, values, self.field.zero, self.target_dim)

    def flat(self) -> Vector:
        """
        Row-major over (i, j, k) with every pair present.
        """
        return tuple(a for row in self.tensor for entry in row for a in entry)

    @property
    def is_zero(self) -> bool:
        return not any(self.flat())

    @property
    def is_symmetric(self) -> bool:
        n = self.source_dim
        return all(
            self.tensor[i][j] == self.tensor[j][i] for i in range(n) for j in range(i + 1, n)
        )

    def subtract(self, other: BilinearMap) -> BilinearMap:
        if (self.source_dim, self.target_dim) != (other.source_dim, other.target_dim):
            raise InputError("bilinear maps have different shapes")
        return BilinearMap(
            field=self.field,
            source_dim=self.source_dim,
            target_dim=self.target_dim,
            tensor=tuple(
                tuple(
                    tuple(a - b for a, b in zip(x, y)) for x, y in zip(row_a, row_b)
                )
                for row_a, row_b in zip(self.tensor, other.tensor)
            ),
        )


class BiderivationFlags(ProjectBaseModel, frozen=True):
    symmetric: bool = False
    skew: bool = False
    condition1: bool = False

    @property
    def label(self) -> str:
        names = [name for name, on in self.model_dump().items() if on]
        return ",".join(names) if names else "none"


SYMMETRIC_CONDITION1 = BiderivationFlags(symmetric=True, condition1=True)


class SpaceKind(StrEnum):
    BIDERIVATION: str
    DERIVATION: str
    CENTROID: str
    TRIVIAL: str
    SPECIAL: str


class SolutionSpace(ExactModel):
    """
    All maps satisfying a set of linear constraints, held as an RREF basis
    of flattened coefficient vectors.

    Bilinear spaces flatten row-major over (i, j, k). With the symmetric
    flag only i <= j is stored, with the skew flag only i < j.
    Linear-map spaces flatten the images of e_0, e_1, ... in turn.
    """

    kind: SpaceKind
    field: FieldSpec
    source_dim: int
    target_dim: int
    flags: BiderivationFlags = BiderivationFlags()
    condition2: bool = False
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple[Vector, ...]:
        return self.space.basis

    @property
    def is_bilinear(self) -> bool:
        return self.kind not in (SpaceKind.DERIVATION, SpaceKind.CENTROID)

    def pairs(self) -> list[tuple[int, int]]:
        """
        Stored (i, j) pairs in flattening order.
        """
        n = self.source_dim
        if self.flags.skew:
            return [(i, j) for i in range(n) for j in range(i + 1, n)]
        if self.flags.symmetric:
            return [(i, j) for i in range(n) for j in range(i, n)]
        return [(i, j) for i in range(n) for j in range(n)]

    def to_bilinear(self, coefficients: Sequence[Any]) -> BilinearMap:
        if not self.is_bilinear:
            raise InputError(f"a {self.kind} space holds linear maps")
        n, m = self.source_dim, self.target_dim
        tensor = [[self.field.zero_vector(m) for _ in range(n)] for _ in range(n)]
        for index, (i, j) in enumerate(self.pairs()):
            value = tuple(coefficients[index * m : (index + 1) * m])
            tensor[i][j] = value
            if i != j and self.flags.symmetric and not self.flags.skew:
                tensor[j][i] = value
            elif i != j and self.flags.skew:
                tensor[j][i] = tuple(-a for a in value)
        return BilinearMap(
            field=self.field,
            source_dim=n,
            target_dim=m,
            tensor=tuple(tuple(row) for row in tensor),
        )

    def from_bilinear(self, d: BilinearMap) -> Vector:
        """
        Stored coordinates of d; d must respect the symmetry flags.
        """
        return tuple(a for i, j in self.pairs() for a in d.tensor[i][j])

    def to_linear(self, coefficients: Sequence[Any]) -> LinearMap:
        if self.is_bilinear:
            raise InputError(f"a {self.kind} space holds bilinear maps")
        return LinearMap.from_flat(self.field, self.source_dim, self.target_dim, coefficients)

    def bilinear_maps(self) -> list[BilinearMap]:
        return [self.to_bilinear(v) for v in self.basis]

    def linear_maps(self) -> list[LinearMap]:
        return [self.to_linear(v) for v in self.basis]

    def full_subspace(self) -> Subspace:
        """
        The same space in full row-major coordinates, for comparing
        spaces built with different flags.
        """
        if not self.is_bilinear:
            return self.space
        n, m = self.source_dim, self.target_dim
        return Subspace.span(
            self.field, n * n * m, (d.flat() for d in self.bilinear_maps())
        )


class BiderivationCheck(ProjectBaseModel):
    axiom_i: bool
    axiom_ii: bool
    symmetric: bool | None = None
    skew: bool | None = None
    condition1: bool | None = None
    failed: str | None = None
    witness: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return all(
            value is not False
            for value in (self.axiom_i, self.axiom_ii, self.symmetric, self.skew, self.condition1)
        )


class DerivationCheck(ProjectBaseModel):
    derivation: bool
    witness: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return self.derivation


class CentroidCheck(ProjectBaseModel):
    centroid: bool
    condition2: bool | None = None
    failed: str | None = None
    witness: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return self.centroid and self.condition2 is not False


class TrivialCheck(ProjectBaseModel):
    symmetric: bool
    central_values: bool
    vanishes_on_derived: bool
    biderivation: bool

    @property
    def passed(self) -> bool:
        return self.symmetric and self.central_values and self.vanishes_on_derived and self.biderivation


class SpecialCheck(ProjectBaseModel):
    symmetric_biderivation: bool
    vanishes_on_derived_pairs: bool
    derived_values_annihilate: bool

    @property
    def passed(self) -> bool:
        return (
            self.symmetric_biderivation
            and self.vanishes_on_derived_pairs
            and self.derived_values_annihilate
        )


class StageAction(StrEnum):
    QUOTIENT_BY_CENTER: str
    RESTRICT_TO_DERIVED: str
    TERMINATE_CENTROID: str
    TERMINATE_ZERO: str
    TERMINATE_FIXED_POINT: str
    DEPTH_LIMIT: str


class ReductionStage(ExactModel):
    """
    One algebra in the chain. ``kernel_dim`` is the kernel of the stage
    map on the directly solved space (d -> induced quotient map, or
    d -> restriction to J'); ``expected_kernel_dim`` is the same kernel
    computed independently as the space's intersection with the trivial
    (resp. special) biderivations.
    """

    index: int
    algebra: JordanAlgebra
    jordan: bool
    dim: int
    center_dim: int
    perfect: bool
    direct_dim: int
    action: StageAction
    kernel_dim: int | None = None
    expected_kernel_dim: int | None = None
    image_rank: int | None = None
    next_direct_dim: int | None = None
    centroid_dim: int | None = None

    @property
    def kernel_agrees(self) -> bool | None:
        if self.kernel_dim is None:
            return None
        return self.kernel_dim == self.expected_kernel_dim

    @property
    def lifts_surjectively(self) -> bool | None:
        if self.image_rank is None or self.next_direct_dim is None:
            return None
        return self.image_rank == self.next_direct_dim


class CrossCheck(ProjectBaseModel):
    direct_dim: int
    reconstructed_dim: int
    kernels_agree: bool

    @property
    def agree(self) -> bool:
        return self.direct_dim == self.reconstructed_dim and self.kernels_agree


class ReductionReport(ExactModel):
    algebra_name: str | None = None
    stages: tuple[ReductionStage, ...]
    complete: bool
    terminal_space: SolutionSpace | None = None
    cross_check: CrossCheck
