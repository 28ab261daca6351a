import random

import pytest
from hypothesis import given, settings, strategies as st

from gsetca.automaton import (
    BINARY,
    Configuration,
    ConstructionTriple,
    LocalRule,
    StateSet,
    Window,
    act_on_config,
    local_eval,
    random_configuration,
    random_configurations,
    run,
    step,
    step_window,
)
from gsetca.coordsys import preset
from gsetca.errors import QuiescenceError, TooLarge, UnknownSymbol
from gsetca.group import IDENTITY, Isometry, PointPart, Universe, compose, translation
from gsetca.zoo import BUILTINS, MOORE, builtin

import oracles

SQ, PT = Universe.SQUARE_TESSELLATION, Universe.POINT_LATTICE
R = PointPart

GLIDER = {(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)}


def gol_pattern(live):
    return tuple("1" if c in live else "0" for c in MOORE)


def test_local_eval_game_of_life():
    rule = builtin("game-of-life").rule
    assert local_eval(rule, gol_pattern(set())) == "0"
    assert local_eval(rule, gol_pattern({(-1, -1), (0, 1), (1, 0)})) == "1"
    assert local_eval(rule, gol_pattern({(-1, -1), (0, 1), (1, 0), (1, 1)})) == "0"
    assert local_eval(rule, gol_pattern({(0, 0), (0, 1), (1, 0), (1, 1)})) == "1"


def test_local_eval_rejects_unknown_symbols():
    rule = builtin("game-of-life").rule
    with pytest.raises(UnknownSymbol):
        local_eval(rule, ("2",) * 9, BINARY)
    with pytest.raises(ValueError):
        local_eval(rule, ("0",) * 8, BINARY)


def test_state_set_validation():
    with pytest.raises(ValueError):
        StateSet((), "0")
    with pytest.raises(ValueError):
        StateSet(("0", "1"), "2")
    with pytest.raises(ValueError):
        StateSet(("0", "0"), "0")


def test_quiescence_is_checked():
    rule = LocalRule.constant([(0, 0)], "1")
    with pytest.raises(QuiescenceError):
        ConstructionTriple(rule, preset("translations-only", SQ))


def test_table_limit():
    many = StateSet(tuple(str(i) for i in range(5)), "0")
    memory = [(i, 0) for i in range(7)]  # 5**7 > 2**16
    with pytest.raises(TooLarge):
        LocalRule.from_function(memory, lambda p: "0", many)


def test_configuration_is_canonical():
    x = Configuration("0", {(0, 0): "0", (1, 1): "1"})
    assert x.support == frozenset({(1, 1)})
    assert x == Configuration.of("0", [(1, 1)])
    assert hash(x) == hash(Configuration.of("0", [(1, 1)]))
    assert x[(5, 5)] == "0"


def test_act_on_config_examples():
    x = Configuration.of("0", [(0, 0)])
    assert act_on_config(IDENTITY, x, SQ) == x
    assert act_on_config(translation((2, 3)), x, SQ) == Configuration.of("0", [(2, 3)])
    y = Configuration.of("0", [(1, 0)])
    assert act_on_config(Isometry(R.R90), y, SQ) == Configuration.of("0", [(-1, 1)])


isometries = st.builds(
    Isometry, st.sampled_from(list(R)), st.tuples(st.integers(-4, 4), st.integers(-4, 4))
)
small_configs = st.builds(
    lambda cells: Configuration.of("0", cells),
    st.sets(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=10),
)


@given(isometries, isometries, small_configs)
def test_act_on_config_is_an_action(g, h, x):
    assert act_on_config(g, act_on_config(h, x, SQ), SQ) == act_on_config(compose(g, h), x, SQ)


def test_step_examples():
    empty = Configuration("0", {})
    for name in BUILTINS:
        assert step(builtin(name), empty) == empty
    fl = builtin("fairy-lights")
    # cell (0,1) is odd and reads (0,0); (0,-1) is odd too and reads (0,-2)
    assert step(fl, Configuration.of("0", [(0, 0)])) == Configuration.of("0", [(0, 1)])


def test_step_requires_quiescent_default():
    with pytest.raises(ValueError):
        step(builtin("identity"), Configuration("1", {}))


def test_glider():
    gol = builtin("game-of-life")
    x = Configuration.of("0", GLIDER)
    assert run(gol, x, 4) == Configuration.of("0", {(a + 1, b + 1) for a, b in GLIDER})
    assert run(gol, x, 0) == x


def test_fairy_lights_closed_form():
    fl = builtin("fairy-lights")
    for x in random_configurations(BINARY, 50, seed=3, radius=8):
        cells = {(a, b) for a in range(-10, 11) for b in range(-10, 11)}
        want = oracles.fairy_lights(dict(x.cells), cells)
        got = step(fl, x)
        assert all(got[c] == want[c] for c in cells)
        assert got.support <= cells


@pytest.mark.parametrize("name", ["fairy-lights", "margolus-tau0", "margolus-tau1"])
def test_involutions_run_two(name):
    tr = builtin(name)
    for x in random_configurations(BINARY, 30, seed=11):
        assert run(tr, x, 2) == x


def test_step_window_examples():
    x = random_configuration(BINARY, 6, random.Random(1))
    ident = builtin("identity")
    known = Window((-3, -3), (3, 3))
    res = step_window(ident, known, x)
    assert res.region == frozenset(known)

    res = step_window(builtin("game-of-life"), Window((0, 0), (9, 9)), x)
    assert res.region == frozenset(Window((1, 1), (8, 8)))

    res = step_window(builtin("fairy-lights"), Window((0, 0), (4, 3)), x)
    excluded = set(Window((0, 0), (4, 3))) - res.region
    # row 0: odd cells read row -1; row 3: even cells read row 4
    assert excluded == {(1, 0), (3, 0), (1, 3), (3, 3)}


@pytest.mark.parametrize("name", BUILTINS)
def test_step_window_agrees_with_step(name):
    tr = builtin(name)
    known = Window((-8, -8), (8, 8))
    for x in random_configurations(BINARY, 100, seed=5, radius=7):
        res = step_window(tr, known, x)
        y = step(tr, x)
        assert res.region
        assert all(y[c] == v for c, v in res.values.items())


@pytest.mark.parametrize("name", BUILTINS)
def test_locality(name):
    tr = builtin(name)
    rng = random.Random(name)
    for _ in range(30):
        x = random_configuration(BINARY, 5, rng)
        alpha = (rng.randint(-4, 4), rng.randint(-4, 4))
        reads = set(tr.read_cells(alpha))
        cells = dict(x.cells)
        for _ in range(6):
            c = (rng.randint(-7, 7), rng.randint(-7, 7))
            if c not in reads:
                cells[c] = rng.choice("01")
        assert step(tr, Configuration("0", cells))[alpha] == step(tr, x)[alpha]


def test_step_output_is_canonical():
    tr = builtin("game-of-life")
    for x in random_configurations(BINARY, 20, seed=2):
        y = step(tr, x)
        assert all(v != y.default for v in y.cells.values())


DECLARED = {
    "game-of-life": [translation((1, 0)), translation((0, 1)), Isometry(R.R90, (1, 0)),
                     Isometry(R.MX, (0, 1))],
    "fairy-lights": [translation((1, 1)), translation((1, -1)), Isometry(R.R180, (-1, 0))],
    "margolus-tau0": [translation((2, 0)), translation((0, 2)), Isometry(R.R90, (2, 0))],
    "identity": [translation((1, 0)), Isometry(R.R90, (1, 0)), Isometry(R.MD, (0, 0))],
}


@pytest.mark.parametrize("name", sorted(DECLARED))
def test_equivariance_under_declared_generators(name):
    tr = builtin(name)
    for g in DECLARED[name]:
        for x in random_configurations(BINARY, 50, seed=9):
            assert step(tr, act_on_config(g, x, tr.universe)) == act_on_config(
                g, step(tr, x), tr.universe
            )


@settings(max_examples=40, deadline=None)
@given(small_configs)
def test_step_support_bound(x):
    tr = builtin("game-of-life")
    y = step(tr, x)
    for c in y.support:
        assert any(max(abs(c[0] - d[0]), abs(c[1] - d[1])) <= 1 for d in x.support)
