"""Exception hierarchy shared by all lwhbench modules."""


class LWHBenchError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(LWHBenchError, ValueError):
    pass


class NotImplementedSpec(LWHBenchError, NotImplementedError):
    """Raised for unknown hash ids or registry-only entries."""


class StateError(LWHBenchError, RuntimeError):
    """Operation not allowed in the current phase of a hash instance."""


class ParseError(LWHBenchError, ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class DegenerateInput(LWHBenchError, ValueError):
    """Normalization input where every value is equal."""
