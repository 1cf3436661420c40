"""Exact integer helpers shared by the path counts and the formula registry."""
import math
from functools import lru_cache


class InexactDivisionError(ArithmeticError):
    """Raised when a formula's division leaves a remainder."""
    pass


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """n-th Catalan number, binomial(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"Catalan number undefined for n={n}")
    return math.comb(2 * n, n) // (n + 1)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def exact_div(numerator: int, denominator: int) -> int:
    """Integer quotient; raises InexactDivisionError on a remainder."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(f"{numerator} is not divisible by {denominator}")
    return quotient


def parking_function_total(n: int) -> int:
    """Number of parking functions of size n, (n + 1)^(n - 1)."""
    if n < 1:
        raise ValueError(f"Parking functions need n >= 1, got {n}")
    return (n + 1) ** (n - 1)
