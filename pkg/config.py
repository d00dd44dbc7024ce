import os
from fractions import Fraction

from dotenv import load_dotenv

load_dotenv()


def _fractions(raw, default):
    if not raw:
        return default
    return tuple(Fraction(item.strip()) for item in raw.split(',') if item.strip())


class Config:
    LOG_LEVEL = os.environ.get('SPAN_LOG_LEVEL') or 'INFO'
    # 0 - без ограничения времени
    MWIS_TIME_BUDGET = float(os.environ.get('SPAN_MWIS_TIME_BUDGET') or 0)

    BRUTEFORCE_MAX_VERTICES = 24
    ORACLE_MAX_ELEMENTS = int(os.environ.get('SPAN_ORACLE_MAX_ELEMENTS') or 24)
    WELL_BRUTEFORCE_MAX_U = 12
    REGULAR_MAX_RESTARTS = 1000

    FUZZ_COUNT = int(os.environ.get('SPAN_FUZZ_COUNT') or 500)
    FUZZ_SEED = int(os.environ.get('SPAN_FUZZ_SEED') or 42)
    FUZZ_NMAX = int(os.environ.get('SPAN_FUZZ_NMAX') or 6)
    FUZZ_PSET = _fractions(os.environ.get('SPAN_FUZZ_PSET'),
                           (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)))
    FUZZ_SPANS = _fractions(os.environ.get('SPAN_FUZZ_SPANS'),
                            (Fraction(1), Fraction(1, 3), Fraction(5, 2)))
    FUZZ_BASE_POOL = _fractions(os.environ.get('SPAN_FUZZ_BASE_POOL'),
                                (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-2, 3)))
