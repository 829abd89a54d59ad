"""Scenario files: named observables, contexts over them, and named states.

A scenario is either one of the built-ins (``kcbs``, ``mub``, ``commuting``)
or a JSON document following ``scenarios/README.md``.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from contextium.errors import ContextiumError, DataValidationError, DimensionMismatchError, UsageError
from contextium.linalg import ComplexMatrix, DensityMatrix, HermitianOperator, maximally_mixed
from contextium.measures import Context, ContextFamily, fourier_basis
from contextium.spin import kcbs_pentagon, kcbs_scenario_states

logger = logging.getLogger(__name__)


class ContextEntry(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    observables: tuple[str, str, str]


class ScenarioFile(BaseModel):
    """On-disk scenario document."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    dim: int = Field(ge=1)
    observables: dict[str, ComplexMatrix]
    contexts: list[ContextEntry]
    states: dict[str, ComplexMatrix] = Field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class Scenario:
    dim: int
    observables: dict[str, HermitianOperator]
    contexts: dict[str, Context]
    triples: dict[str, tuple[str, str, str]]
    states: dict[str, DensityMatrix] = field(default_factory=dict)
    source: str = ""

    @property
    def family(self) -> ContextFamily:
        return ContextFamily.of(list(self.contexts.values()))

    def context(self, name: str) -> Context:
        """Look a context up by name, or by 1-based position."""
        if name in self.contexts:
            return self.contexts[name]
        if name.isdigit() and 1 <= int(name) <= len(self.contexts):
            return list(self.contexts.values())[int(name) - 1]
        raise UsageError(f"unknown context {name!r} in scenario {self.source!r}; known: {', '.join(self.contexts)}")

    def state(self, name: str) -> DensityMatrix:
        if name not in self.states:
            raise UsageError(f"unknown state {name!r} in scenario {self.source!r}; known: {', '.join(self.states)}")
        return self.states[name]


def scenario_from_file(data: ScenarioFile, source: str = "") -> Scenario:
    """Validate a parsed document and build its contexts."""
    for kind, entries in (("observable", data.observables), ("state", data.states)):
        for name, matrix in entries.items():
            if matrix.dim != data.dim:
                raise DimensionMismatchError(f"{kind} {name!r} has dim {matrix.dim}, scenario dim is {data.dim}")

    observables = {name: HermitianOperator.from_matrix(m.to_array()) for name, m in data.observables.items()}
    contexts: dict[str, Context] = {}
    triples: dict[str, tuple[str, str, str]] = {}
    for entry in data.contexts:
        missing = [n for n in entry.observables if n not in observables]
        if missing:
            raise DataValidationError(f"context {entry.name!r} refers to unknown observables {missing}")
        if entry.name in contexts:
            raise DataValidationError(f"duplicate context name {entry.name!r}")
        a, b, c = (observables[n] for n in entry.observables)
        contexts[entry.name] = Context.from_operators(a, b, c, name=entry.name)
        triples[entry.name] = entry.observables
    states = {name: DensityMatrix.from_matrix(m.to_array()) for name, m in data.states.items()}
    logger.debug("scenario %s: %d observables, %d contexts, %d states", source, len(observables), len(contexts), len(states))
    return Scenario(
        dim=data.dim,
        observables=observables,
        contexts=contexts,
        triples=triples,
        states=states,
        source=source,
    )


def scenario_to_file(scenario: Scenario) -> ScenarioFile:
    return ScenarioFile(
        dim=scenario.dim,
        observables={name: ComplexMatrix.from_array(op.matrix) for name, op in scenario.observables.items()},
        contexts=[ContextEntry(name=name, observables=triple) for name, triple in scenario.triples.items()],
        states={name: ComplexMatrix.from_array(rho.matrix) for name, rho in scenario.states.items()},
    )


def _basis_state(d: int, index: int) -> DensityMatrix:
    m = np.zeros((d, d), dtype=complex)
    m[index, index] = 1.0
    return DensityMatrix.from_matrix(m)


def _kcbs_scenario() -> Scenario:
    pentagon = kcbs_pentagon()
    observables = {f"A{i}": pentagon.observable(i) for i in range(1, 6)}
    triples = {f"G{a}": (f"A{(a - 2) % 5 + 1}", f"A{a}", f"A{a % 5 + 1}") for a in range(1, 6)}
    contexts = {ctx.name: ctx for ctx in pentagon.family}
    return Scenario(3, observables, contexts, triples, kcbs_scenario_states(), source="kcbs")


def _mub_scenario() -> Scenario:
    d = 3
    spectrum = np.diag(np.arange(1, d + 1, dtype=complex))
    f = fourier_basis(d)
    observables = {
        "A": HermitianOperator.from_matrix(spectrum),
        "B": HermitianOperator.from_matrix(np.eye(d)),
        "C": HermitianOperator.from_matrix(f @ spectrum @ f.conj().T),
    }
    ctx = Context.from_operators(observables["A"], observables["B"], observables["C"], name="MUB")
    states = {"mixed": maximally_mixed(d), "e0": _basis_state(d, 0)}
    return Scenario(d, observables, {"MUB": ctx}, {"MUB": ("A", "B", "C")}, states, source="mub")


def _commuting_scenario() -> Scenario:
    observables = {
        "A": HermitianOperator.from_matrix(np.diag([1.0, 2.0, 3.0])),
        "B": HermitianOperator.from_matrix(np.diag([5.0, 5.0, 7.0])),
        "C": HermitianOperator.from_matrix(np.diag([3.0, 1.0, 2.0])),
    }
    ctx = Context.from_operators(observables["A"], observables["B"], observables["C"], name="commuting")
    states = {"mixed": maximally_mixed(3), "e0": _basis_state(3, 0)}
    return Scenario(3, observables, {"commuting": ctx}, {"commuting": ("A", "B", "C")}, states, source="commuting")


BUILTIN_SCENARIOS = {
    "kcbs": _kcbs_scenario,
    "mub": _mub_scenario,
    "commuting": _commuting_scenario,
}


def load_scenario(source: str | Path) -> Scenario:
    """Load a built-in scenario by name or a scenario JSON file by path."""
    if str(source) in BUILTIN_SCENARIOS:
        return BUILTIN_SCENARIOS[str(source)]()
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"scenario {str(source)!r} is neither a built-in ({', '.join(BUILTIN_SCENARIOS)}) nor a file")
    try:
        data = ScenarioFile.model_validate_json(path.read_text())
    except ValidationError as exc:
        raise DataValidationError(f"{path}: invalid scenario document\n{exc}") from exc
    try:
        return scenario_from_file(data, source=str(path))
    except ContextiumError as exc:
        logger.debug("scenario %s rejected: %s", path, exc)
        raise
