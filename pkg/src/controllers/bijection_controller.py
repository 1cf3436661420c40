import logging

from src.core.bijections import BijectionError, run_bijection
from src.core.patterns import CapExceededError
from src.models.output_row import BijectionReport

logger = logging.getLogger(__name__)


class BijectionController:
    """Controller for bijection verification runs."""

    def __init__(self, naive_cap: int):
        self.naive_cap = naive_cap
        logger.info("BijectionController initialized")

    def verify(self, name: str, n: int, verify_image: bool = True) -> BijectionReport:
        """
        Run one bijection over its full domain.

        Args:
            name: leafy, noncrossing, fill312321 or trianglestep
            n: Size of the parking functions produced
            verify_image: Compare the image with the naive enumeration

        Returns:
            BijectionReport
        """
        try:
            needs_enumeration = verify_image or name == "trianglestep"
            if needs_enumeration and n > self.naive_cap:
                raise CapExceededError(f"n={n} exceeds the enumeration cap {self.naive_cap}")
            return run_bijection(name, n, verify_image=verify_image)
        except (BijectionError, CapExceededError) as e:
            logger.error(f"Failed to verify bijection {name} at n={n}: {e}")
            raise
