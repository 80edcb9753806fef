"""Finite transducers as tree morphisms, transducer integer sequences and Hanoi Towers machinery."""
from .automata import (
    FinalStateAutomaton,
    PartialRun,
    PartialTransducer,
    Transducer,
    TransducerClass,
    ZeroRayTail,
    bisimulation_classes,
    parse_transducer,
    product,
    serialize_transducer,
    states_equivalent,
)
from .catalog import builtin

__version__ = "0.1.0"
