"""
File helpers: expressions given as @file arguments and report output via orjson.
"""

import sys
from pathlib import Path
from typing import Any, Dict, Optional

import orjson

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


def read_expression(arg: str) -> str:
    """Return arg itself, or the contents of the file when arg is ``@path``.

    Lines are joined so long lambda lists may be split across lines; ``#`` starts a
    comment.
    """
    if not arg.startswith("@"):
        return arg
    parts = []
    with open(arg[1:], "r", encoding="utf-8") as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if line:
                parts.append(line)
    return " ".join(parts)


def dump_json(payload: Dict[str, Any]) -> bytes:
    return orjson.dumps(payload, option=JSON_OPTIONS)


def load_json(data: bytes) -> Dict[str, Any]:
    out: Dict[str, Any] = orjson.loads(data)
    return out


def write_output(content: str, out: Optional[str] = None) -> None:
    """Write to the --out file (parents created) or to stdout."""
    if out is None:
        sys.stdout.write(content if content.endswith("\n") else content + "\n")
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content if content.endswith("\n") else content + "\n", encoding="utf-8")
