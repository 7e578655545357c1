from .utils import (
    format_ratio,
    is_prime_power,
    p_part,
    parse_ratio,
    prime_divisors,
    require_prime,
)
