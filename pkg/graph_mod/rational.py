# graph_mod/rational.py

from fractions import Fraction


def parse_rational(value) -> Fraction:
    """Точное рациональное из int, Fraction или строки "p/q" либо десятичной"""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Floating-point values are not accepted: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ValueError(f"Invalid rational value: {value!r}")


def format_rational(value) -> str:
    return str(Fraction(value))
