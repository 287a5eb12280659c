"""Exact engine and windowed simulator for semicrossed products of
module group algebras over Z and Z[i]."""

from . import domains, dynamics, fock, groupalg, modules, semicross

__version__ = "0.1.0"

__all__ = [
    "domains",
    "modules",
    "groupalg",
    "semicross",
    "fock",
    "dynamics",
    "__version__",
]
