# app/constants.py

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_INTERNAL = 3

BASE_ZERO = "zero"
LISTS_UNIFORM = "uniform:"
LISTS_FILE = "file:"

# генераторы, которых нет среди именованных семейств
RANDOM_GENERATORS = ("random", "regular")
