"""Bundled example programs and their golden CLI transcripts.

Each fixture names a program file and the CLI commands whose combined
output forms its golden transcript; ``argeo corpus`` recomputes the
transcripts and compares them byte-for-byte.  ``{file}`` in a command is
replaced by the bundled file's path (its bare name in the transcript
header, so goldens stay machine-independent).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

_ROOT = Path(__file__).parent


@dataclass(frozen=True)
class Fixture:
    name: str
    filename: str
    commands: tuple[tuple[str, ...], ...]


def fixture_path(fixture: Fixture) -> Path:
    return _ROOT / fixture.filename


def golden_path(fixture: Fixture) -> Path:
    return _ROOT / f"{fixture.name}.golden"


MANIFEST: tuple[Fixture, ...] = (
    Fixture(
        "married_john",
        "married_john.dlp",
        (
            ("parse", "{file}"),
            ("args", "{file}", "--engine", "delp"),
            ("warrant", "{file}", "m"),
            ("warrant", "{file}", "b"),
            ("warrant", "{file}", "m", "--gr"),
            ("justify", "{file}", "m", "--engine", "aspic",
             "--attack", "rebut", "--semantics", "grounded"),
            ("extensions", "{file}", "--engine", "aspic",
             "--attack", "rebut", "--semantics", "grounded"),
            ("postulates", "{file}", "--all"),
            ("compare", "{file}", "--all"),
        ),
    ),
    Fixture(
        "surf",
        "surf.dlp",
        (
            ("args", "{file}", "--engine", "delp"),
            ("warrant", "{file}", "surf"),
            ("warrant", "{file}", "working"),
            ("tree", "{file}", "~nice"),
        ),
    ),
    Fixture(
        "running",
        "running.dlp",
        (
            ("args", "{file}"),
            ("attacks", "{file}", "--attack", "rebut"),
            ("extensions", "{file}", "--attack", "rebut", "--semantics", "grounded"),
            ("extensions", "{file}", "--attack", "rebut", "--semantics", "preferred"),
            ("justify", "{file}", "r", "--attack", "rebut",
             "--semantics", "preferred", "--mode", "credulous"),
            ("justify", "{file}", "r", "--attack", "rebut",
             "--semantics", "preferred", "--mode", "sceptical"),
            ("compare", "{file}", "--all"),
        ),
    ),
    Fixture(
        "crossover",
        "crossover.dlp",
        (
            ("args", "{file}", "--engine", "delp"),
            ("warrant", "{file}", "p"),
            ("warrant", "{file}", "~r"),
            ("tree", "{file}", "p"),
        ),
    ),
    Fixture(
        "lastlink",
        "lastlink.dlp",
        (
            ("args", "{file}", "--engine", "delp"),
            ("warrant", "{file}", "p"),
            ("warrant", "{file}", "q"),
            ("warrant", "{file}", "~r"),
            ("warrant", "{file}", "r"),
            ("warrant", "{file}", "~q"),
            ("postulates", "{file}", "--engine", "delp"),
            ("postulates", "{file}", "--engine", "delp-gr"),
            ("compare", "{file}", "--all"),
        ),
    ),
    Fixture(
        "tandem",
        "tandem.dlp",
        (
            ("args", "{file}"),
            ("extensions", "{file}", "--attack", "dlprebut", "--semantics", "grounded"),
            ("postulates", "{file}", "--engine", "aspic",
             "--attack", "dlprebut", "--semantics", "grounded"),
        ),
    ),
    Fixture(
        "closure5",
        "closure5.dlp",
        (
            ("extensions", "{file}", "--attack", "dlprebut", "--semantics", "grounded"),
            ("postulates", "{file}", "--engine", "aspic",
             "--attack", "dlprebut", "--semantics", "grounded"),
        ),
    ),
    Fixture(
        "blocking1",
        "blocking1.dlp",
        (
            ("tree", "{file}", "r"),
            ("warrant", "{file}", "r"),
        ),
    ),
    Fixture(
        "blocking2",
        "blocking2.dlp",
        (
            ("tree", "{file}", "r"),
            ("warrant", "{file}", "r"),
            ("warrant", "{file}", "r", "--gr"),
            ("game", "{file}", "r", "--engine", "delp-gr"),
        ),
    ),
    Fixture(
        "subarg_game",
        "subarg_game.dlp",
        (
            ("game", "{file}", "p", "--engine", "delp-gr"),
            ("warrant", "{file}", "p"),
            ("warrant", "{file}", "p", "--gr"),
            ("extensions", "{file}", "--engine", "delp-gr", "--semantics", "grounded"),
        ),
    ),
    Fixture(
        "subarg_line",
        "subarg_line.dlp",
        (
            ("tree", "{file}", "p"),
            ("warrant", "{file}", "p"),
            ("warrant", "{file}", "~u"),
            ("warrant", "{file}", "s"),
        ),
    ),
    Fixture(
        "concordance",
        "concordance.dlp",
        (
            ("tree", "{file}", "p"),
            ("warrant", "{file}", "p"),
            ("tree", "{file}", "~q"),
        ),
    ),
    Fixture(
        "circex1",
        "circex1.dlp",
        (
            ("game", "{file}", "~r", "--engine", "delp-gr"),
            ("warrant", "{file}", "~r"),
            ("extensions", "{file}", "--engine", "delp-gr", "--semantics", "grounded"),
        ),
    ),
)
