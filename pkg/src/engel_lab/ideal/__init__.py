from .classify import Shape, classify, is_z_shape
from .families import relator_instances
from .spans import IdealContext, get_context

__all__ = [
    "Shape",
    "classify",
    "is_z_shape",
    "relator_instances",
    "IdealContext",
    "get_context",
]
