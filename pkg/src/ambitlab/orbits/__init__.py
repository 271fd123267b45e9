"""Right orbits, the φ map, and ambit-witness construction."""

from .ambit import AmbitWitness, build_ambit_function, greedy_select, verify_ambit
from .neighborhoods import (
    BasicNeighborhood,
    EpsilonSchedule,
    WindowGrowth,
    enumerate_neighborhoods,
)
from .translation import OrbitTrace, find_approximant, orbit_trace, phi_map, right_translate

__all__ = [
    "AmbitWitness",
    "BasicNeighborhood",
    "EpsilonSchedule",
    "OrbitTrace",
    "WindowGrowth",
    "build_ambit_function",
    "enumerate_neighborhoods",
    "find_approximant",
    "greedy_select",
    "orbit_trace",
    "phi_map",
    "right_translate",
    "verify_ambit",
]
