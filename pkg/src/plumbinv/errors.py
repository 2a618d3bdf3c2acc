"""Exception hierarchy shared by the whole package.

Three broad categories, matching the CLI/service exit model:

* input errors (bad files, bad vectors, graphs failing validation),
* domain refusals (operations that are mathematically undefined or
  unreliable on the given input, e.g. delta on a non-rational graph),
* internal errors (identities the code re-verifies did not hold; these
  always indicate a bug).
"""


class PlumbinvError(Exception):
    """Base class for all package errors."""


class InputError(PlumbinvError):
    """Malformed or invalid user input."""


class UnknownNameError(InputError, KeyError):
    """Lookup of an unknown vertex label or curve name."""

    def __str__(self):
        # bypass KeyError's repr-style rendering
        return Exception.__str__(self)


class GraphParseError(InputError):
    """Syntax or reference error in a graph file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidGraphError(InputError):
    """A structurally parsed graph that fails validation rules."""

    def __init__(self, report):
        self.report = report
        msgs = "; ".join(f.message for f in report.failures)
        super().__init__(f"graph failed validation: {msgs}")


class DomainRefusal(PlumbinvError):
    """The requested quantity is refused on this input (not a bug)."""


class NonRationalError(DomainRefusal):
    """Operation requires a rational singularity (Artin: chi(Z_min) = 1)."""


class CapExceededError(DomainRefusal):
    """A configured enumeration or step cap was exceeded."""


class InternalCheckError(PlumbinvError):
    """An internally re-verified identity failed; indicates a bug."""
