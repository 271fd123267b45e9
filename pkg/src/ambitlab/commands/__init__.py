"""Subcommands that manage state outside the report pipeline."""
