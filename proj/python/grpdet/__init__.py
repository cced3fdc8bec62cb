"""Integer group determinants of Z_p semidirect Z_n.

Thin convenience layer over the compiled core: construct a group, evaluate
determinants exactly, decide membership for the characterized groups, and
build witness elements.

>>> import grpdet
>>> g = grpdet.Group(5, 2, 4)
>>> grpdet.direct_det(grpdet.Element("-1*Y", g), g)
-1
"""

from ._grpdet import (
    Element,
    Group,
    all_ones,
    direct_det,
    factored_det,
    identity,
    member,
    mul,
    necessary_conditions,
    realize,
    selftest,
)

__all__ = [
    "Element",
    "Group",
    "all_ones",
    "direct_det",
    "factored_det",
    "identity",
    "member",
    "mul",
    "necessary_conditions",
    "realize",
    "selftest",
]

__version__ = "0.1.0"
