"""Graded representations of quivers with relations.

    >>> import gradrep
    >>> p = gradrep.load("fixtures/fix_b.json")
    >>> p.run("ars", module="S1", direction="ending")["certificate"]["result"]
    'pass'
"""

import json
from os import PathLike
from typing import Any, Union

from ._gradrep import (
    InputError,
    InternalError,
    PreconditionError,
    UnsupportedRadical,
    WindowError,
    command_names,
)
from . import _gradrep

__all__ = [
    "Problem",
    "load",
    "loads",
    "commands",
    "InputError",
    "PreconditionError",
    "WindowError",
    "UnsupportedRadical",
    "InternalError",
]


class Problem:
    def __init__(self, native: _gradrep.Problem):
        self._p = native

    @property
    def modules(self) -> list[str]:
        return list(self._p.modules)

    @property
    def vertices(self) -> list[str]:
        return list(self._p.vertices)

    @property
    def field(self) -> str:
        return self._p.field

    @property
    def task_names(self) -> list[str]:
        return list(self._p.tasks)

    def run(self, command: str, **args: Any) -> dict:
        """Run one command. Keyword names follow the CLI flags (module, source,
        target, with_, direction, cap, window=(lo, hi), ...)."""
        clean = {}
        for key, value in args.items():
            key = key.rstrip("_")
            if key == "window" and not isinstance(value, str):
                value = f"{value[0]}:{value[1]}"
            clean[key] = value
        return json.loads(self._p.run_json(command, json.dumps(clean)))

    def run_tasks(self) -> dict:
        return json.loads(self._p.run_tasks_json())

    def table(self, command: str, result: dict) -> str:
        return self._p.render_table(command, json.dumps(result))

    def serialize(self) -> str:
        return self._p.serialize()


def load(path: Union[str, PathLike]) -> Problem:
    return Problem(_gradrep.load_problem(str(path)))


def loads(doc: Union[str, dict]) -> Problem:
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return Problem(_gradrep.parse_problem(text))


def commands() -> list[str]:
    return list(command_names())
