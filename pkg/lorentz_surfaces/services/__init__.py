"""Async services over the pure geometry library."""

from .correspondence_service import CorrespondenceResult
from .curve_service import CurveTable
from .toolkit import LorentzToolkit

__all__ = ["LorentzToolkit", "CurveTable", "CorrespondenceResult"]
