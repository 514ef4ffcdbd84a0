"""Benchmarking toolkit for lightweight hash functions.

Submodules: ``hashkit`` (hash modes, registry, KATs), ``profiler`` (CpB),
``memfoot`` (RAM/ROM from map and .su files), ``energymodel`` (power traces
to energy), ``metrics`` (E-RANK, normalization, reports) and ``cli``.
"""

__version__ = "0.1.0"
