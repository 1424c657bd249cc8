"""Exception types shared across the package."""

from __future__ import annotations


class QctError(Exception):
    """Base class for all errors raised by this package."""


class CapacityExceeded(QctError):
    """A register would need more qubits than the configured maximum."""


class ArityMismatch(QctError):
    """A gate or layer was applied to a register of the wrong width."""


class ParseError(QctError):
    """Malformed sentence text.

    `position` is the zero-based character offset where parsing failed.
    """

    def __init__(self, detail: str, position: int):
        super().__init__(detail)
        self.detail = detail
        self.position = position

    def __str__(self) -> str:
        return f"syntax error at offset {self.position}: {self.detail}"


class ReservedName(QctError):
    """An atom was named with a reserved word (f, not, snot, and, or)."""


class UnboundAtom(QctError):
    """A sentence mentions an atom the model does not assign."""

    def __init__(self, name: str):
        super().__init__(f"no qubit assigned to atom '{name}'")
        self.name = name


class ModelError(QctError):
    """A model file or mapping is malformed or violates its constraints."""


class SamplerStuck(QctError):
    """Rejection sampling hit its attempt cap without an accepted draw."""
