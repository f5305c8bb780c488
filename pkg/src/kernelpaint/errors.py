"""Exception types shared across the toolkit."""


class KernelPaintError(Exception):
    """Base class for all toolkit-specific errors."""


class FormatError(KernelPaintError, ValueError):
    """Malformed serialized input (graph6 line, certificate JSON, ...)."""


class ConstructionError(KernelPaintError, ValueError):
    """A named-graph generator was given an unknown name or bad parameters."""


class SizeLimitError(KernelPaintError, ValueError):
    """Input exceeds the documented exhaustive-search ceiling of an operation."""


class UndefinedStatisticError(KernelPaintError, ValueError):
    """A statistic is undefined for this graph (e.g. Ore-degree of an edgeless graph)."""


class HypothesisNotMetError(KernelPaintError, ValueError):
    """The counting hypothesis of the reduction extractor does not hold.

    Callers use this as the "no sufficiently large independent cover" signal
    rather than as a hard failure.
    """
