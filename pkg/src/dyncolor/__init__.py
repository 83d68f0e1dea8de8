"""Fully dynamic vertex coloring for graphs of bounded arboricity."""

from .arbdecomp import ArbDecomp, ForestEdgeEvent, ForestOp, InconsistentEvent
from .dynforest import KERNEL, DynForest
from .levels import EventKind, Hierarchy, OrientationEvent

__version__ = "0.1.0"

__all__ = [
    "ArbDecomp",
    "DynForest",
    "EventKind",
    "ForestEdgeEvent",
    "ForestOp",
    "Hierarchy",
    "InconsistentEvent",
    "KERNEL",
    "OrientationEvent",
]
