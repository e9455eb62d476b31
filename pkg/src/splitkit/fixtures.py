"""Named diagrams shipped with the package.

``SPLITKIT_FIXTURES`` may point at another directory of ``<name>.pd``
files; it replaces the bundled set entirely.
"""
from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .diagram import PDCode, parse_pd

ENV_VAR = "SPLITKIT_FIXTURES"


def fixture_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("splitkit") / "fixtures"))


def fixture_names() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.pd"))


def fixture_text(name: str) -> str:
    path = fixture_dir() / f"{name}.pd"
    if not path.is_file():
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(fixture_names())}")
    return path.read_text()


def load_fixture(name: str) -> PDCode:
    return parse_pd(fixture_text(name))
