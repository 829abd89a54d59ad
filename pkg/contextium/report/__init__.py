"""Scenario loading and report rendering for the command line."""

from .kcbs import kcbs_report
from .render import dumps_csv, dumps_json, dumps_pairs_csv, format_pairs, format_table
from .scenario import (
    BUILTIN_SCENARIOS,
    ContextEntry,
    Scenario,
    ScenarioFile,
    load_scenario,
    scenario_from_file,
    scenario_to_file,
)
from .schema import ContextCheck, KcbsReport, MajoranaReport, ValidationReport

__all__ = [
    "BUILTIN_SCENARIOS",
    "ContextCheck",
    "ContextEntry",
    "KcbsReport",
    "MajoranaReport",
    "Scenario",
    "ScenarioFile",
    "ValidationReport",
    "dumps_csv",
    "dumps_json",
    "dumps_pairs_csv",
    "format_pairs",
    "format_table",
    "kcbs_report",
    "load_scenario",
    "scenario_from_file",
    "scenario_to_file",
]
