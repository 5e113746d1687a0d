from __future__ import annotations

from typing import Any, Sequence

from pydantic import model_validator

from ...helpers.data.models import ExactModel, Vector
from ...internal.errors import InputError
from .fields import FieldSpec
from .matrices import Subspace
from .vectors import check_length, combination, sub


class LinearMap(ExactModel):
    """
    Linear map F^source_dim -> F^target_dim.
    Row i of ``images`` holds the coordinates of the image of e_i.
    """

    field: FieldSpec
    source_dim: int
    target_dim: int
    images: tuple[Vector, ...]

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.images) != self.source_dim:
            raise ValueError(
                f"expected {self.source_dim} images, got {len(self.images)}"
            )
        for i, image in enumerate(self.images):
            if len(image) != self.target_dim:
                raise ValueError(
                    f"image of basis vector {i} has length {len(image)}, expected {self.target_dim}"
                )
        return self

    @classmethod
    def from_rows(
        cls,
        field: FieldSpec,
        rows: Sequence[Sequence[Any]],
        target_dim: int | None = None,
    ) -> LinearMap:
        if target_dim is None:
            target_dim = len(rows[0]) if rows else 0
        return cls(
            field=field,
            source_dim=len(rows),
            target_dim=target_dim,
            images=tuple(field.vector(row) for row in rows),
        )

    @classmethod
    def from_flat(
        cls, field: FieldSpec, source_dim: int, target_dim: int, flat: Sequence[Any]
    ) -> LinearMap:
        check_length(flat, source_dim * target_dim, "flattened map")
        return cls(
            field=field,
            source_dim=source_dim,
            target_dim=target_dim,
            images=tuple(
                tuple(flat[i * target_dim : (i + 1) * target_dim])
                for i in range(source_dim)
            ),
        )

    @classmethod
    def zero(cls, field: FieldSpec, source_dim: int, target_dim: int) -> LinearMap:
        return cls(
            field=field,
            source_dim=source_dim,
            target_dim=target_dim,
            images=(field.zero_vector(target_dim),) * source_dim,
        )

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> LinearMap:
        return cls(
            field=field,
            source_dim=n,
            target_dim=n,
            images=tuple(field.unit_vector(n, i) for i in range(n)),
        )

    def flat(self) -> Vector:
        return tuple(a for image in self.images for a in image)

    def apply(self, v: Sequence[Any]) -> Vector:
        check_length(v, self.source_dim)
        return combination(v, self.images, self.field.zero, self.target_dim)

    def subtract(self, other: LinearMap) -> LinearMap:
        if (other.source_dim, other.target_dim) != (self.source_dim, self.target_dim):
            raise InputError("maps have different shapes")
        return LinearMap(
            field=self.field,
            source_dim=self.source_dim,
            target_dim=self.target_dim,
            images=tuple(sub(a, b) for a, b in zip(self.images, other.images)),
        )

    @property
    def is_zero(self) -> bool:
        return not any(any(image) for image in self.images)

    def image(self) -> Subspace:
        return Subspace.span(self.field, self.target_dim, self.images)
