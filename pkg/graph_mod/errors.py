# graph_mod/errors.py


class GraphFormatError(ValueError):
    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class UnknownVertexError(ValueError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"Unknown vertex: {vertex!r}")


class UndefinedWeightError(ValueError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"No weight defined for element {element}")


class GraphTooLargeError(ValueError):
    def __init__(self, size, limit, what="vertices"):
        self.size = size
        self.limit = limit
        super().__init__(f"Graph too large: {size} {what}, limit is {limit}")
