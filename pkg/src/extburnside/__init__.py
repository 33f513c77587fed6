"""Exact extended Burnside rings of finite permutation groups."""

__version__ = "0.1.0"

from .errors import (
    CapacityError,
    EbrError,
    NotACocycleError,
    NotASubgroupError,
    ParseError,
    UnknownLabelError,
)
from .groups import Group, group_from_spec

__all__ = [
    "CapacityError",
    "EbrError",
    "ExtElement",
    "ExtRing",
    "Group",
    "NotACocycleError",
    "NotASubgroupError",
    "ParseError",
    "UnknownLabelError",
    "group_from_spec",
    "schur_multiplier",
    "subgroup_classes",
    "__version__",
]


def __getattr__(name):
    # Lazy: keep plain `import extburnside` cheap for CLI --help and version.
    if name in ("ExtRing", "ExtElement"):
        from . import ring

        return getattr(ring, name)
    if name == "schur_multiplier":
        from .multiplier import schur_multiplier

        return schur_multiplier
    if name == "subgroup_classes":
        from .subgroups import subgroup_classes

        return subgroup_classes
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
