"""Serializable wire models for matrices and vectors."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

ComplexPair = tuple[float, float]


def complex_pairs(values) -> list[ComplexPair]:
    """Flatten a complex vector into [re, im] pairs."""
    return [(float(z.real), float(z.imag)) for z in np.asarray(values, dtype=complex).reshape(-1)]


def from_pairs(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=complex)


class ComplexMatrix(BaseModel):
    """Row-major d×d complex matrix, entries stored as [re, im] pairs."""

    model_config = ConfigDict(frozen=True)

    dim: int = Field(ge=1)
    entries: list[list[ComplexPair]]

    @model_validator(mode="after")
    def _check_square(self) -> "ComplexMatrix":
        if len(self.entries) != self.dim or any(len(row) != self.dim for row in self.entries):
            raise ValueError(f"entries must form a {self.dim}×{self.dim} grid")
        return self

    @classmethod
    def from_array(cls, matrix) -> "ComplexMatrix":
        m = np.asarray(matrix, dtype=complex)
        return cls(dim=m.shape[0], entries=[complex_pairs(row) for row in m])

    def to_array(self) -> np.ndarray:
        return np.array([from_pairs(row) for row in self.entries], dtype=complex)
