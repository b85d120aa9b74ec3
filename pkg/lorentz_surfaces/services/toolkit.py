"""
Unified toolkit combining all services.
"""

from .correspondence_service import CorrespondenceService
from .curve_service import CurveService
from .surface_service import SurfaceService
from .verification_service import VerificationService


class LorentzToolkit(CurveService, SurfaceService, CorrespondenceService, VerificationService):
    """Unified toolkit combining all services"""

    pass
