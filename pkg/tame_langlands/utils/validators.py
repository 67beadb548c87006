"""
Validation Module

Literal and job-option checks for the command line. Library code raises typed errors;
these helpers turn them into ``(is_valid, errors)`` so a whole input file can be reported
at once.
"""

from __future__ import annotations

from pathlib import Path

from tame_langlands.exceptions import ValidationError

from .literals import PARSERS, read_literals

OUTPUT_FORMATS = ("tsv", "text")


def validate_literal(text: str, kinds: tuple[str, ...] | None = None) -> tuple[bool, list[str]]:
    """
    Validate one literal line

    Args:
        text: Literal text
        kinds: Accepted kind words; all known kinds when omitted

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    errors = []
    if not text or not text.strip():
        errors.append("Literal cannot be empty")
        return False, errors
    kind = text.split(maxsplit=1)[0]
    allowed = kinds or tuple(PARSERS)
    if kind not in allowed:
        errors.append(f"Unexpected literal kind {kind!r}, expected one of: {', '.join(allowed)}")
        return False, errors
    try:
        PARSERS[kind](text)
    except ValidationError as e:
        errors.append(str(e))
    return not errors, errors


def validate_literal_file(path: str | Path, kinds: tuple[str, ...] | None = None) -> tuple[bool, list[str]]:
    """Validate every line of a literal file; errors are prefixed with the line number"""
    errors = []
    try:
        for number, line in read_literals(path):
            ok, line_errors = validate_literal(line, kinds)
            if not ok:
                errors.extend(f"line {number}: {msg}" for msg in line_errors)
    except ValidationError as e:
        errors.append(str(e))
    return not errors, errors


def validate_job_options(
    output_format: str | None = None,
    jobs: int | None = None,
    bound_group_order: int | None = None,
    bound_dim: int | None = None,
) -> tuple[bool, list[str]]:
    errors = []
    if output_format is not None and output_format not in OUTPUT_FORMATS:
        errors.append(f"Unknown output format {output_format!r}")
    for name, value in (("jobs", jobs), ("bound-group-order", bound_group_order), ("bound-dim", bound_dim)):
        if value is not None and value < 1:
            errors.append(f"--{name} must be positive")
    return not errors, errors
