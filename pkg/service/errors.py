# service/errors.py


class InvalidSpanError(ValueError):
    def __init__(self, span):
        self.span = span
        super().__init__(f"Span must be a positive rational, got {span}")


class InstanceTooLargeError(ValueError):
    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(f"Instance too large for exhaustive search: {size} elements, limit is {limit}")


class MwisBudgetExceeded(RuntimeError):
    """Точный поиск независимого множества не уложился в отведённое время"""

    def __init__(self, budget=None):
        self.budget = budget
        limit = "its time budget" if budget is None else f"the time budget of {budget}s"
        super().__init__(f"Maximum-weight independent set search exceeded {limit}")


class NoAugmentingPath(RuntimeError):
    def __init__(self, blocked, reachable_u, reachable_i, improving_set=None):
        self.blocked = blocked
        self.reachable_u = frozenset(reachable_u)
        self.reachable_i = frozenset(reachable_i)
        self.improving_set = improving_set
        super().__init__(
            f"No alternating path frees a slot for U-vertex {blocked}; "
            f"reachable U={sorted(self.reachable_u)}, reachable I={sorted(self.reachable_i)}"
        )

    def to_json(self) -> dict:
        return {
            "blocked": self.blocked,
            "reachable_u": sorted(self.reachable_u),
            "reachable_i": sorted(self.reachable_i),
            "improving_set": None if self.improving_set is None else sorted(self.improving_set),
        }


class InternalInvariantViolation(RuntimeError):
    """Нарушен шаг, который построение гарантирует; несёт дамп для разбора"""

    def __init__(self, message, dump=None):
        self.dump = dump or {}
        super().__init__(message)


class NonUniformSpan(ValueError):
    def __init__(self, first, second, first_span, second_span):
        self.elements = (first, second)
        super().__init__(
            f"Lists do not share one span: {first} has span {first_span}, {second} has span {second_span}"
        )


class DegenerateList(ValueError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"List of {element} has two equal values")


class MissingList(ValueError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"No list given for {element}")


class RegularGenerationError(ValueError):
    def __init__(self, n, d, attempts):
        self.n = n
        self.d = d
        super().__init__(f"No simple {d}-regular graph on {n} vertices after {attempts} pairing attempts")
