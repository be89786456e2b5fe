"""
Root System Service Module
"""

from .models import RootClass, RootTag
from .service import (
    RootSystem,
    check_root_form,
    classify_root,
    get_root_system,
    positive_roots_below,
    reflect,
)

__all__ = [
    "RootClass",
    "RootTag",
    "RootSystem",
    "check_root_form",
    "classify_root",
    "get_root_system",
    "positive_roots_below",
    "reflect",
]
