"""Exception types shared across the package."""


class SmallOverlapError(Exception):
    """Base class for all errors raised by this package."""


class PresentationSyntaxError(SmallOverlapError, ValueError):
    """A presentation document is malformed or violates a basic invariant."""


class WordDomainError(SmallOverlapError, ValueError):
    """An input word is outside the domain of the requested operation."""


class NotSmallOverlapError(SmallOverlapError):
    """A presentation fails the small overlap condition required here.

    Carries a witness decomposition of the offending relation word when one
    exists.
    """

    def __init__(self, degree, word=None, decomposition=None):
        self.degree = degree
        self.word = word
        self.decomposition = decomposition
        detail = f"presentation does not satisfy C({degree})"
        if word is not None and decomposition:
            detail += f": {word} = {'·'.join(decomposition)}"
        super().__init__(detail)


class AmbiguousOverlapError(SmallOverlapError):
    """Two distinct relation words supplied the same clean overlap prefix.

    Cannot happen for a valid C(4) presentation; raised instead of choosing
    arbitrarily when the input is out of contract.
    """


class ClassSizeCapError(SmallOverlapError, RuntimeError):
    """An equivalence-class enumeration exceeded its safety cap."""


class DeterminismError(SmallOverlapError):
    """A machine expected to be deterministic offered more than one move,
    or a transducer state does not fit the deterministic shape catalogue."""


class SearchLimitError(SmallOverlapError, RuntimeError):
    """A bounded search ran out of budget before reaching a verdict."""


class StateLimitError(SmallOverlapError, RuntimeError):
    """Materialising a machine would exceed the configured state budget."""


class MachineFormatError(SmallOverlapError, ValueError):
    """A serialized machine document is malformed."""
