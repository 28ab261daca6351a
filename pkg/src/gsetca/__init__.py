"""Cellular automata on sets with a transitive group action.

The lattice isometry group acts on the cells of the square tessellation (or
the integer lattice); an automaton is given by a construction triple of a
memory set, a local rule and a coordinate system.
"""

from .analysis import (
    compose_triples,
    equivariance_check,
    invariance_check,
    minimize,
    s_set,
    useful_cells,
    verify_composition,
    verify_inverse,
)
from .automaton import (
    BINARY,
    Configuration,
    ConstructionTriple,
    LocalRule,
    StateSet,
    Window,
    act_on_config,
    local_eval,
    random_configuration,
    run,
    step,
    step_window,
)
from .coordsys import (
    CoordinateSystem,
    change_origin,
    conjugate_system,
    coordinate,
    decompose,
    preset,
    verify_on_patch,
)
from .group import IDENTITY, Isometry, PointPart, Universe, act, compose, inverse
from .zoo import BUILTINS, builtin

__version__ = "0.1.0"

__all__ = [
    "compose_triples",
    "equivariance_check",
    "invariance_check",
    "minimize",
    "s_set",
    "useful_cells",
    "verify_composition",
    "verify_inverse",
    "BINARY",
    "Configuration",
    "ConstructionTriple",
    "LocalRule",
    "StateSet",
    "Window",
    "act_on_config",
    "local_eval",
    "random_configuration",
    "run",
    "step",
    "step_window",
    "CoordinateSystem",
    "change_origin",
    "conjugate_system",
    "coordinate",
    "decompose",
    "preset",
    "verify_on_patch",
    "IDENTITY",
    "Isometry",
    "PointPart",
    "Universe",
    "act",
    "compose",
    "inverse",
    "BUILTINS",
    "builtin",
]
