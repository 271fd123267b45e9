"""Seeded property suites behind ``ambitlab props test``."""

from .suites import SUITES, random_measure, run_suites

__all__ = ["SUITES", "random_measure", "run_suites"]
