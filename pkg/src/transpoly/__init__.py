"""Transition polynomial weight systems on chord diagrams, ribbon graphs and delta-matroids."""

from .chord import Convention, Greek, q_chord
from .delta_matroid import SetSystem, q_dm
from .polynomial import Polynomial
from .ribbon import RibbonGraph, q_ribbon

__all__ = ["Convention", "Greek", "Polynomial", "RibbonGraph", "SetSystem", "q_chord", "q_dm", "q_ribbon"]
__version__ = "0.1.0"
