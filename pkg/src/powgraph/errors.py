"""Exception hierarchy shared by all powgraph modules.

Three broad families matter to callers (and to the CLI exit codes):
input problems, exceeded budgets, and internal consistency failures.
Everything else is a plain InputError subclass carrying a specific name.
"""


class PowgraphError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PowgraphError):
    """Malformed input: bad file, bad spec string, violated precondition."""


class LimitExceeded(PowgraphError):
    """A configured budget (group order, vertex count, solver size) was hit."""


class InternalCheckFailed(PowgraphError):
    """A self-consistency verification failed; indicates a bug, not bad input."""


class NotNilpotent(InputError):
    """Sylow decomposition failed: some p-power-order set is not a subgroup."""


class InconsistentPresentation(InputError):
    """Collection did not terminate, or the collected table is not a group."""


class NoDominatingVertex(InputError):
    """The p-group promise of the greedy motif solver was violated."""


class AmbiguousParent(PowgraphError):
    """Two distinct minimum-colour common parents exist in a reduced graph."""


class NotCandidate(InputError):
    """A recognition input fails a structural precheck; carries the reason."""


class EmbeddingMismatch(InternalCheckFailed):
    """An embedded subgraph is not colour-isomorphic to its gadget."""


class InsufficientUnits(InputError):
    """Too few subgroup generators to host the clause vertices (b too small)."""
