import json
import subprocess
import sys

import pytest

from gsetca.automaton import BINARY, Configuration, Window, random_configurations, step
from gsetca.cli import main
from gsetca.errors import RuleFileError
from gsetca.io import (
    dump_config,
    dump_rule,
    load_config,
    load_rule,
    render_pgm,
    render_svg,
    render_text,
)
from gsetca.zoo import BUILTINS, builtin, padded_game_of_life

GLIDER = [(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)]


def write(path, doc):
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


@pytest.fixture
def rules(tmp_path):
    def rule(name):
        return write(tmp_path / f"{name}.json", {"builtin": name})

    return rule


def config_doc(cells, state="1"):
    return {"default": "0", "cells": [[x, y, state] for x, y in cells]}


# --- files ------------------------------------------------------------------------


@pytest.mark.parametrize("name", BUILTINS)
def test_rule_round_trip(name):
    tr = builtin(name)
    doc = dump_rule(tr)
    again = load_rule(json.loads(json.dumps(doc)))
    assert again.memory == tr.memory and again.origin == tr.origin
    for x in random_configurations(BINARY, 20, seed=13):
        assert step(again, x) == step(tr, x)


def test_padded_rule_round_trip_as_table():
    tr = padded_game_of_life()
    doc = dump_rule(tr)
    assert doc["rule"]["type"] == "table" and len(doc["rule"]["entries"]) == 1024
    again = load_rule(doc)
    for x in random_configurations(BINARY, 10, seed=1):
        assert step(again, x) == step(tr, x)


def test_config_round_trip():
    x = Configuration.of("0", GLIDER)
    assert load_config(dump_config(x), BINARY) == x


def base_rule():
    return {
        "states": ["0", "1"],
        "quiescent": "0",
        "universe": "square-tessellation",
        "coordinate_system": {"preset": "translations-only", "origin": [0, 0]},
        "memory": [[0, 0], [0, 1]],
        "rule": {"type": "table", "entries": {"0,0": "0", "0,1": "1", "1,0": "1", "1,1": "0"}},
    }


@pytest.mark.parametrize(
    "patch,field",
    [
        ({"quiescent": "2"}, "quiescent"),
        ({"universe": "torus"}, "universe"),
        ({"coordinate_system": {"preset": "nope"}}, "coordinate_system.preset"),
        ({"memory": [[0, 0], [0, 0]]}, "memory"),
        ({"memory": [[0, 0], [0, "x"]]}, "memory[1]"),
        ({"rule": {"type": "table", "entries": {"0,0": "0"}}}, "rule.entries"),
        ({"rule": {"type": "table", "entries": {"0,0": "1", "0,1": "1", "1,0": "1", "1,1": "0"}}},
         "rule"),
        ({"rule": {"type": "projection", "cell": [5, 5]}}, "rule.cell"),
        ({"rule": {"type": "mystery"}}, "rule.type"),
    ],
)
def test_rule_validation(patch, field):
    doc = base_rule()
    doc.update(patch)
    with pytest.raises(RuleFileError) as info:
        load_rule(doc)
    assert info.value.field == field


def test_config_validation():
    with pytest.raises(RuleFileError):
        load_config({"default": "0", "cells": [[0, 0, "7"]]}, BINARY)
    with pytest.raises(RuleFileError):
        load_config({"default": "0", "cells": [[0, 0, "1"], [0, 0, "1"]]}, BINARY)


def test_renderings():
    x = Configuration.of("0", [(0, 0), (1, 1)])
    w = Window((0, 0), (2, 1))
    assert render_text(x, BINARY, w) == "010\n100\n"
    assert render_pgm(x, BINARY, w) == "P2\n3 2\n1\n1 0 1\n0 1 1\n"
    assert render_svg(x, BINARY, w).count("<rect") == 3


# --- command line -----------------------------------------------------------------


def test_run_identity(tmp_path, rules, capsys):
    cfg = write(tmp_path / "c.json", config_doc(GLIDER))
    out = tmp_path / "o.json"
    assert main(["run", "--rule", rules("identity"), "--config", cfg, "--steps", "5",
                 "--format", "json", "--out", str(out)]) == 0
    assert load_config(str(out)) == Configuration.of("0", GLIDER)


def test_run_glider(tmp_path, rules, capsys):
    cfg = write(tmp_path / "c.json", config_doc(GLIDER))
    assert main(["run", "--rule", rules("game-of-life"), "--config", cfg, "--steps", "4",
                 "--window", "0,0,3,3"]) == 0
    moved = {(x + 1, y + 1) for x, y in GLIDER}
    want = render_text(Configuration.of("0", moved), BINARY, Window((0, 0), (3, 3)))
    assert capsys.readouterr().out == want


def test_run_fairy_lights_twice(tmp_path, rules):
    x = random_configurations(BINARY, 1, seed=5)[0]
    cfg = write(tmp_path / "c.json", dump_config(x))
    out = tmp_path / "o.json"
    assert main(["run", "--rule", rules("fairy-lights"), "--config", cfg, "--steps", "2",
                 "--format", "json", "--out", str(out)]) == 0
    assert load_config(str(out)) == x


def test_run_frames(tmp_path, rules):
    cfg = write(tmp_path / "c.json", config_doc(GLIDER))
    out = tmp_path / "g.pgm"
    assert main(["run", "--rule", rules("game-of-life"), "--config", cfg, "--steps", "2",
                 "--format", "pgm", "--frames", "--out", str(out)]) == 0
    assert sorted(p.name for p in tmp_path.glob("g.*.pgm")) == [
        "g.0000.pgm", "g.0001.pgm", "g.0002.pgm"]
    assert out.read_text() == (tmp_path / "g.0002.pgm").read_text()


def test_invalid_input_exit_code(tmp_path, rules, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    cfg = write(tmp_path / "c.json", config_doc(GLIDER))
    assert main(["run", "--rule", str(bad), "--config", cfg]) == 2
    assert "line 1" in capsys.readouterr().err
    assert main(["run", "--rule", str(tmp_path / "missing.json"), "--config", cfg]) == 2
    bad_cfg = write(tmp_path / "d.json", {"default": "0", "cells": [[0, 0, "9"]]})
    assert main(["run", "--rule", rules("identity"), "--config", bad_cfg]) == 2
    assert "cells[0]" in capsys.readouterr().err


def test_analyze_min_memory(tmp_path, capsys):
    path = write(tmp_path / "p.json", dump_rule(padded_game_of_life()))
    assert main(["analyze", "min-memory", "--rule", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "MINIMAL-MEMORY size=9" and len(lines) == 10
    assert "5,5" not in lines


def test_analyze_equivariance(rules, capsys):
    assert main(["analyze", "equivariance", "--rule", rules("state-shift-44"),
                 "--radius", "2"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("VIOLATION")
    assert any(f"{r} FAILS" in out for r in ("R90:1,0", "R180:1,1", "R270:0,1"))
    assert main(["analyze", "equivariance", "--rule", rules("fairy-lights"),
                 "--radius", "4"]) == 0


def test_analyze_invariance(rules, capsys):
    assert main(["analyze", "invariance", "--rule", rules("state-shift-44"),
                 "--elements", "R0:0,0"]) == 0
    assert capsys.readouterr().out.strip() == "R0:0,0 holds"
    assert main(["analyze", "invariance", "--rule", rules("game-of-life"),
                 "--elements", "R90:1,0;MX:0,1"]) == 0
    assert main(["analyze", "invariance", "--rule", rules("game-of-life"),
                 "--elements", "R90:5,0"]) == 2
    assert main(["analyze", "invariance", "--rule", rules("game-of-life"),
                 "--elements", "Q:1"]) == 2


def test_compose_and_verify(tmp_path, rules, capsys):
    out = tmp_path / "m.json"
    assert main(["compose", "--rule1", rules("margolus-tau1"), "--rule2", rules("margolus-tau0"),
                 "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["memory"]) == 16 and len(doc["rule"]["entries"]) == 2**16
    assert main(["verify-compose", "--rule1", rules("margolus-tau1"),
                 "--rule2", rules("margolus-tau0"), "--trials", "30", "--seed", "0"]) == 0
    assert capsys.readouterr().out.strip() == "CONSISTENT trials=30"
    assert main(["verify-compose", "--rule1", rules("state-shift-d"),
                 "--rule2", rules("state-shift-d"), "--seed", "0"]) == 1
    assert capsys.readouterr().out.startswith("COUNTEREXAMPLE")
    assert main(["verify-compose", "--rule1", rules("identity"),
                 "--rule2", rules("game-of-life"), "--seed", "0"]) == 0


def test_state_shift_d_directed_counterexample(tmp_path, rules, capsys):
    # replay the witness configuration from the text report
    cfg = write(tmp_path / "c.json", config_doc([(1, 2)]))
    out = tmp_path / "o.json"
    main(["compose", "--rule1", rules("state-shift-d"), "--rule2", rules("state-shift-d"),
          "--out", str(out)])
    composed = load_rule(str(out))
    assert composed.memory == ((-1, 1),)
    x = load_config(cfg, BINARY)
    assert step(composed, x)[(1, 0)] == "0"
    tr = builtin("state-shift-d")
    assert step(tr, step(tr, x))[(1, 0)] == "1"


def test_verify_inverse_cli(rules, capsys):
    assert main(["verify-inverse", "--rule1", rules("state-shift-44"),
                 "--rule2", rules("state-shift-44-inverse"), "--seed", "1"]) == 0
    assert main(["verify-inverse", "--rule1", rules("game-of-life"),
                 "--rule2", rules("game-of-life"), "--seed", "1"]) == 1


def test_hyp(tmp_path, capsys):
    svg = tmp_path / "h.svg"
    assert main(["hyp", "build", "--layers", "1", "--out", str(svg)]) == 0
    assert svg.read_text().count("<polygon") == 9
    assert main(["hyp", "build", "--layers", "3"]) == 0
    out = capsys.readouterr().out
    assert "layer counts 1 8 32 120" in out and "cells 161" in out
    alive = write(tmp_path / "a.json", [])
    assert main(["hyp", "run", "--layers", "2", "--alive", alive, "--steps", "3"]) == 0
    assert "alive 0: []" in capsys.readouterr().out
    bad = write(tmp_path / "b.json", [500])
    assert main(["hyp", "run", "--layers", "1", "--alive", bad]) == 2
    assert main(["hyp", "build", "--layers", "9"]) == 2


def test_deterministic_output(tmp_path, rules):
    outs = []
    for k in range(2):
        out = tmp_path / f"v{k}.txt"
        subprocess.run(
            [sys.executable, "-m", "gsetca", "verify-compose", "--rule1", rules("state-shift-d"),
             "--rule2", rules("state-shift-d"), "--seed", "7"],
            stdout=out.open("w"), check=False,
        )
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] and outs[0].startswith(b"COUNTEREXAMPLE")
