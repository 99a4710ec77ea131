"""Fault-tolerant Clifford circuit synthesis and merged color-surface code decoding."""

__version__ = "0.1.0"
