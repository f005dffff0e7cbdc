import logging
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Rational = Union[int, Fraction]

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """Route toolkit logs to stderr at the requested level"""
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, force=True)


def format_fraction(value: Rational) -> str:
    """Render a rational as 'a' or 'a/b'"""
    return str(Fraction(value))


def parse_fraction(text: str) -> Fraction:
    """Parse 'a', 'a/b' or a finite decimal into an exact Fraction"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Invalid rational number: {text!r}")


def format_vector(vec: Iterable[Rational]) -> str:
    return "(" + ",".join(format_fraction(v) for v in vec) + ")"


def vec_add(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Rational, a: Sequence[Rational]) -> tuple:
    return tuple(c * x for x in a)


def floor_divmod(vec: Sequence[int], p: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Componentwise floored division: vec = p*quotient + remainder, 0 <= remainder < p"""
    quotient = tuple(v // p for v in vec)
    remainder = tuple(v % p for v in vec)
    return quotient, remainder
