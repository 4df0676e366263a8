"""Exception hierarchy shared by all layers.

``MathInvariantViolation`` and its subclasses signal a broken mathematical
invariant (a bug or inconsistent input data, never a user mistake); the CLI
maps them to exit code 3.  ``BudgetExceeded`` maps to exit code 4 and
``ConfigError`` to exit code 2.
"""


class TridecoError(Exception):
    """Base class for all library errors."""


class ConfigError(TridecoError):
    """Invalid job configuration; carries the offending field path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class BudgetExceeded(TridecoError):
    """A configured degree or dimension budget was exhausted."""


class DegreeBudgetExceeded(BudgetExceeded):
    """No top degree found within the configured degree budget."""


class MathInvariantViolation(TridecoError):
    """An exact mathematical invariant failed to hold."""


class NotAGroup(MathInvariantViolation):
    """Cayley table is not a group table."""


class NotAModule(MathInvariantViolation):
    """Action matrices do not define a module."""


class NotSemisimple(MathInvariantViolation):
    """Algebra required to be semisimple is not."""


class FieldNotSplitting(MathInvariantViolation):
    """The configured cyclotomic field does not split the algebra."""


class BraidRelationFailed(MathInvariantViolation):
    """Candidate braiding does not satisfy the braid relation."""


class TopNotOneDimensional(MathInvariantViolation):
    """Top homogeneous component of a Nichols algebra is not a line."""


class PsiNotInvertible(MathInvariantViolation):
    """The functional-sweep map onto the right R-span is not bijective."""


class PairingLegOutsideRlRr(MathInvariantViolation):
    """A coaction leg escaped the span it is required to live in."""


class NotAStable(MathInvariantViolation):
    """Candidate maximal submodule is not stable under the full algebra."""


class BottomNotSimple(MathInvariantViolation):
    """Bottom component of a simple graded module is not a simple weight."""


class NotInLattice(MathInvariantViolation):
    """Character does not lie in the lattice spanned by the given basis."""
