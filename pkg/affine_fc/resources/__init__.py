"""
affine-fc Resources

Topic resources bound to an AffineGroup.
"""

from .cells import CellResource
from .extended import ExtendedResource
from .patterns import PatternResource
from .roots import RootResource
from .verification import VerificationResource
from .words import WordResource

__all__ = [
    "WordResource",
    "PatternResource",
    "RootResource",
    "CellResource",
    "ExtendedResource",
    "VerificationResource",
]
