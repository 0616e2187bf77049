"""Named fixture diagrams and corpus files.

Corpus files hold one ``name: <PD text>`` entry per line; blank lines and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .diagram import Diagram, parse_pd
from .errors import PDParseError
from .laurent import HalfLaurent, parse_poly

ACCEPTANCE_NAMES = ("UNKNOT", "HOPF_N", "TREF_L", "T24", "FIG8", "K5_2")


@dataclass(frozen=True)
class Fixture:
    name: str
    pd: str
    expected_jones: HalfLaurent | None
    expected_det: int
    listed_class: bool
    note: str = ""
    twist_crossing: int | None = None

    @property
    def diagram(self) -> Diagram:
        return parse_pd(self.pd)


@lru_cache(maxsize=None)
def _load() -> dict[str, Fixture]:
    raw = json.loads(resources.files("qalinks").joinpath("data/fixtures.json").read_text())
    out = {}
    for entry in raw:
        jones = entry.get("jones")
        out[entry["name"]] = Fixture(
            name=entry["name"],
            pd=entry["pd"],
            expected_jones=parse_poly(jones) if jones else None,
            expected_det=entry["determinant"],
            listed_class=entry.get("listed_class", False),
            note=entry.get("note", ""),
            twist_crossing=entry.get("twist_crossing"),
        )
    return out


def fixtures() -> dict[str, Fixture]:
    return dict(_load())


def fixture(name: str) -> Fixture:
    table = _load()
    if name not in table:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(table))}")
    return table[name]


def fixture_diagram(name: str) -> Diagram:
    return fixture(name).diagram


def parse_corpus(text: str) -> list[tuple[str, Diagram]]:
    entries = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, pd = line.partition(":")
        name = name.strip()
        if not sep or not name:
            raise PDParseError(f"line {lineno}: expected 'name: <PD text>'")
        if name in seen:
            raise PDParseError(f"line {lineno}: duplicate corpus name {name!r}")
        seen.add(name)
        try:
            entries.append((name, parse_pd(pd)))
        except PDParseError as exc:
            raise PDParseError(f"line {lineno} ({name}): {exc}") from None
    return entries


def load_corpus(path: str | Path) -> list[tuple[str, Diagram]]:
    return parse_corpus(Path(path).read_text())


def standard_corpus() -> list[tuple[str, Diagram]]:
    return parse_corpus(resources.files("qalinks").joinpath("data/standard.corpus").read_text())
