"""Controller modules for business logic."""
from .count_controller import CountController
from .bijection_controller import BijectionController
from .sequence_controller import SequenceController

__all__ = ['CountController', 'BijectionController', 'SequenceController']
