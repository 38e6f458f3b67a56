"""Exception types shared across modules."""


class RangeError(LookupError):
    """A coefficient table does not cover the indices a computation needs."""


class ConsistencyError(RuntimeError):
    """Ingested data contradicts a recomputed value (e.g. an automorphism order)."""
