"""Checks every presentation file of a directory."""

from __future__ import annotations

import concurrent.futures
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

from lie.enums import CheckMode
from lie.exceptions import LieAlgebraError

from ..nilpotent import LiePresentation, check_class_cap
from ..presentation_file import read_presentation
from .criteria import run_checks
from .models import Verdict

logger = logging.getLogger(__name__)


@dataclass
class BatchEntry:
    """One file's outcome: a presentation and verdict, or the error that stopped it."""

    path: Path
    presentation: LiePresentation | None = None
    verdict: Verdict | None = None
    error: LieAlgebraError | None = None


def _check_file(path: Path, mode: CheckMode, full_battery: bool | None, max_class: int | None) -> BatchEntry:
    try:
        pres = read_presentation(path)
        check_class_cap(pres.class_cap, max_class)
        return BatchEntry(path, pres, run_checks(pres, mode, full_battery=full_battery))
    except LieAlgebraError as e:
        logger.warning("%s: %s", path, e)
        return BatchEntry(path, error=e)


def presentation_files(directory: Path) -> list[Path]:
    """The ``*.lie`` files of a directory, sorted."""
    return sorted(p for p in directory.glob("*.lie") if p.is_file())


def run_directory(
    paths: Iterable[Path],
    mode: CheckMode,
    *,
    full_battery: bool | None = None,
    max_class: int | None = None,
    max_workers: int | None = None,
) -> list[BatchEntry]:
    """Checks files concurrently; entries come back in sorted path order."""
    ordered = sorted(paths)
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [executor.submit(_check_file, path, mode, full_battery, max_class) for path in ordered]
        entries = [future.result() for future in futures]
    logger.info("checked %d files in %s mode", len(entries), mode.value)
    return entries
