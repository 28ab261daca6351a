"""JSON rule and configuration files, and text/PGM/SVG renderings.

Rule file::

    {"states": ["0", "1"], "quiescent": "0",
     "universe": "square-tessellation",
     "coordinate_system": {"preset": "translations-only", "origin": [0, 0]},
     "memory": [[0, 0], [0, 1]],
     "rule": {"type": "table", "entries": {"0,0": "0", "0,1": "1", ...}}}

``rule.type`` is one of ``table``, ``life-sum``, ``projection`` (with
``"cell": [x, y]``) or ``margolus``.  ``{"builtin": name}`` loads an example
automaton instead.  Configuration file::

    {"default": "0", "cells": [[x, y, "1"], ...]}
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path
from typing import Any, Optional, Union

from .automaton import (
    Configuration,
    ConstructionTriple,
    LocalRule,
    StateSet,
    TABLE_LIMIT,
    Window,
)
from .coordsys import PRESETS, preset
from .errors import GSetCAError, QuiescenceError, RuleFileError
from .group import Universe
from .zoo import BUILTINS, builtin

PathOrDoc = Union[str, Path, dict]


def _read(src: PathOrDoc, what: str) -> dict:
    if isinstance(src, dict):
        return src
    try:
        text = Path(src).read_text(encoding="utf-8")
    except OSError as exc:
        raise RuleFileError(what, f"cannot read {src}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RuleFileError(what, f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise RuleFileError(what, "top level must be a JSON object")
    return doc


def _cell(value: Any, field: str) -> tuple[int, int]:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)
    ):
        raise RuleFileError(field, f"expected [x, y] integers, got {value!r}")
    return (value[0], value[1])


def _states(doc: dict) -> StateSet:
    symbols = doc.get("states")
    if not isinstance(symbols, list) or not symbols:
        raise RuleFileError("states", "expected a nonempty list of strings")
    for i, s in enumerate(symbols):
        if not isinstance(s, str) or not s or "," in s:
            raise RuleFileError(f"states[{i}]", f"bad state name {s!r}")
    if len(set(symbols)) != len(symbols):
        raise RuleFileError("states", "state names must be distinct")
    q = doc.get("quiescent")
    if q not in symbols:
        raise RuleFileError("quiescent", f"{q!r} is not one of the states")
    return StateSet(tuple(symbols), q)


def load_rule(src: PathOrDoc) -> ConstructionTriple:
    doc = _read(src, "rule")
    if "builtin" in doc:
        name = doc["builtin"]
        if name not in BUILTINS:
            raise RuleFileError("builtin", f"unknown builtin {name!r}")
        try:
            return builtin(name, _states(doc)) if "states" in doc else builtin(name)
        except ValueError as exc:
            raise RuleFileError("states", str(exc)) from None
    states = _states(doc)
    try:
        universe = Universe.parse(doc.get("universe"))
    except ValueError:
        raise RuleFileError("universe", f"expected one of {[u.value for u in Universe]}") from None

    cs_doc = doc.get("coordinate_system")
    if not isinstance(cs_doc, dict):
        raise RuleFileError("coordinate_system", "expected an object with 'preset'")
    name = cs_doc.get("preset")
    if name not in PRESETS:
        raise RuleFileError("coordinate_system.preset", f"unknown preset {name!r}")
    origin = _cell(cs_doc.get("origin", [0, 0]), "coordinate_system.origin")
    try:
        cs = preset(name, universe, origin)
    except ValueError as exc:
        raise RuleFileError("coordinate_system.preset", str(exc)) from None

    mem_doc = doc.get("memory")
    if not isinstance(mem_doc, list):
        raise RuleFileError("memory", "expected a list of [x, y] cells")
    memory = [_cell(c, f"memory[{i}]") for i, c in enumerate(mem_doc)]
    if len(set(memory)) != len(memory):
        raise RuleFileError("memory", "memory cells must be distinct")

    rule = _rule(doc.get("rule"), memory, states, cs.origin)
    try:
        return ConstructionTriple(rule, cs, states)
    except QuiescenceError as exc:
        raise RuleFileError("rule", str(exc)) from None


def _rule(rdoc, memory, states: StateSet, origin) -> LocalRule:
    if not isinstance(rdoc, dict):
        raise RuleFileError("rule", "expected an object with 'type'")
    kind = rdoc.get("type")
    if kind in ("life-sum", "margolus") and not {"0", "1"} <= set(states.symbols):
        raise RuleFileError("rule.type", f"{kind} needs states '0' and '1'")
    if kind == "life-sum":
        if origin not in memory:
            raise RuleFileError("memory", "life-sum needs the origin cell in memory")
        return LocalRule.life_sum(memory, origin)
    if kind == "projection":
        cell = _cell(rdoc.get("cell"), "rule.cell")
        if cell not in memory:
            raise RuleFileError("rule.cell", f"{list(cell)} is not a memory cell")
        return LocalRule.projection(memory, cell)
    if kind == "margolus":
        if len(memory) != 4:
            raise RuleFileError("memory", "margolus needs exactly 4 memory cells")
        return LocalRule.margolus(memory)
    if kind == "table":
        n = len(states) ** len(memory)
        if n > TABLE_LIMIT:
            raise RuleFileError(
                "rule.entries", f"table would have {n} entries (limit {TABLE_LIMIT})"
            )
        entries = rdoc.get("entries")
        if not isinstance(entries, dict):
            raise RuleFileError("rule.entries", "expected an object")
        table = {}
        for key, value in entries.items():
            pattern = tuple(key.split(",")) if memory else ()
            if len(pattern) != len(memory) or any(s not in states for s in pattern):
                raise RuleFileError(f"rule.entries[{key!r}]", "bad pattern key")
            if value not in states:
                raise RuleFileError(f"rule.entries[{key!r}]", f"unknown state {value!r}")
            table[pattern] = value
        for pattern in itertools.product(states.symbols, repeat=len(memory)):
            if pattern not in table:
                raise RuleFileError("rule.entries", f"missing pattern {','.join(pattern)!r}")
        return LocalRule.table(memory, table)
    raise RuleFileError("rule.type", f"unknown rule type {kind!r}")


def dump_rule(tr: ConstructionTriple) -> dict:
    """Explicit rule-file document for a triple (builtins are expanded)."""
    cs = tr.coordsys
    if not cs.serializable:
        raise GSetCAError("coordinate system is not a (translated) preset; cannot serialize")
    doc: dict[str, Any] = {
        "states": list(tr.states.symbols),
        "quiescent": tr.states.quiescent,
        "universe": tr.universe.value,
        "coordinate_system": {"preset": cs.name, "origin": list(cs.origin)},
        "memory": [list(c) for c in tr.memory],
    }
    rule = tr.rule
    if rule.kind == "life-sum" and rule.params["center"] == cs.origin:
        doc["rule"] = {"type": "life-sum"}
    elif rule.kind == "projection":
        doc["rule"] = {"type": "projection", "cell": list(rule.params["cell"])}
    elif rule.kind == "margolus":
        doc["rule"] = {"type": "margolus"}
    else:
        entries = rule.entries(tr.states)
        doc["rule"] = {"type": "table", "entries": {",".join(k): v for k, v in entries.items()}}
    return doc


def load_config(src: PathOrDoc, states: Optional[StateSet] = None) -> Configuration:
    doc = _read(src, "config")
    default = doc.get("default")
    if not isinstance(default, str):
        raise RuleFileError("default", "expected a state name")
    if states is not None and default not in states:
        raise RuleFileError("default", f"unknown state {default!r}")
    cells_doc = doc.get("cells", [])
    if not isinstance(cells_doc, list):
        raise RuleFileError("cells", "expected a list of [x, y, state]")
    cells = {}
    for i, entry in enumerate(cells_doc):
        if not isinstance(entry, list) or len(entry) != 3:
            raise RuleFileError(f"cells[{i}]", "expected [x, y, state]")
        c = _cell(entry[:2], f"cells[{i}]")
        s = entry[2]
        if not isinstance(s, str) or (states is not None and s not in states):
            raise RuleFileError(f"cells[{i}]", f"unknown state {s!r}")
        if c in cells:
            raise RuleFileError(f"cells[{i}]", f"cell {list(c)} listed twice")
        cells[c] = s
    return Configuration(default, cells)


def dump_config(x: Configuration) -> dict:
    return {"default": x.default, "cells": [[c[0], c[1], s] for c, s in sorted(x.cells.items())]}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


# --- renderings ----------------------------------------------------------------

_ALIASES = "0123456789abcdefghijklmnopqrstuvwxyz"


def aliases(states: StateSet) -> dict[str, str]:
    if all(len(s) == 1 for s in states.symbols):
        return {s: s for s in states.symbols}
    return {s: _ALIASES[i] for i, s in enumerate(states.symbols)}


def default_window(x: Configuration) -> Window:
    return x.bounding_box() or Window((0, 0), (0, 0))


def render_text(x: Configuration, states: StateSet, window: Optional[Window] = None) -> str:
    """One row per y, top row first; one character per cell."""
    window = window or default_window(x)
    alias = aliases(states)
    rows = []
    for y in range(window.hi[1], window.lo[1] - 1, -1):
        rows.append("".join(alias[x[(cx, y)]] for cx in range(window.lo[0], window.hi[0] + 1)))
    return "\n".join(rows) + "\n"


def render_pgm(x: Configuration, states: StateSet, window: Optional[Window] = None) -> str:
    """Plain (P2) PGM; the first state is white, the last black."""
    window = window or default_window(x)
    maxval = max(len(states) - 1, 1)
    lines = ["P2", f"{window.width} {window.height}", str(maxval)]
    for y in range(window.hi[1], window.lo[1] - 1, -1):
        lines.append(
            " ".join(
                str(maxval - states.index(x[(cx, y)]))
                for cx in range(window.lo[0], window.hi[0] + 1)
            )
        )
    return "\n".join(lines) + "\n"


def render_svg(
    x: Configuration, states: StateSet, window: Optional[Window] = None, cell_px: int = 12
) -> str:
    window = window or default_window(x)
    w, h = window.width * cell_px, window.height * cell_px
    n = max(len(states) - 1, 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="#fff" stroke="#888"/>',
    ]
    for (cx, cy), s in sorted(x.cells.items()):
        if (cx, cy) not in window:
            continue
        gray = 255 - round(255 * states.index(s) / n)
        px = (cx - window.lo[0]) * cell_px
        py = (window.hi[1] - cy) * cell_px
        parts.append(
            f'<rect x="{px}" y="{py}" width="{cell_px}" height="{cell_px}" '
            f'fill="rgb({gray},{gray},{gray})"><title>{cx},{cy}={s}</title></rect>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
