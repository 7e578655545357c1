from fractions import Fraction
from typing import List, Optional

from sympy import factorint, isprime

from ..exceptions import GroupDomainError


def prime_divisors(n: int) -> List[int]:
    """
    List the primes dividing a positive integer.

    Args:
        n (int): A positive integer.

    Returns:
        List[int]: The prime divisors of `n` in increasing order.
    """

    return sorted(factorint(n))


def p_part(n: int, p: int) -> int:
    """
    The largest power of `p` dividing `n`, i.e. `|n|_p`.

    Args:
        n (int): A positive integer.
        p (int): A prime.

    Returns:
        int: `p^a` where `p^a` divides `n` and `p^(a+1)` does not.
    """

    return int(p ** factorint(n).get(p, 0))


def is_prime_power(n: int) -> Optional[int]:
    """
    Return the prime `p` if `n = p^a` with `a >= 1`, otherwise None.
    """

    factors = factorint(n)
    if len(factors) != 1:
        return None
    return int(next(iter(factors)))


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not isprime(p):
        raise GroupDomainError(f"{p!r} is not a prime")
    return p


def format_ratio(value: Fraction) -> str:
    """
    Render an exact ratio as `num/den` in lowest terms, `1` rather than `1/1`.
    """

    return str(Fraction(value))


def parse_ratio(value: Optional[str]) -> Optional[Fraction]:
    """
    Parse a `num/den` string to an exact ratio, handling None values.

    Args:
        value (Optional[str]): The string to parse. Can be None.

    Returns:
        Optional[Fraction]: The parsed ratio or None if parsing fails
    """

    if value is None:
        return None
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        return None
