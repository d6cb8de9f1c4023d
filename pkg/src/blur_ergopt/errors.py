"""Exception hierarchy.

Every error carries a stable ``code`` used by the CLI to build structured
reports and exit statuses (0 ok, 1 internal, 2 invalid input, 3 inexact
certificate).
"""

from __future__ import annotations


class BlurErgoptError(Exception):
    code = "internal-error"
    exit_status = 1


class InvalidInput(BlurErgoptError):
    code = "invalid-input"
    exit_status = 2


class WordNotAllowed(InvalidInput):
    code = "word-not-allowed"


class EmptyCylinder(InvalidInput):
    code = "empty-cylinder"


class InvalidResolution(InvalidInput):
    code = "invalid-resolution"

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"invalid resolution ({clause})" + (f": {detail}" if detail else ""))


class UndecidableAtBound(BlurErgoptError):
    """A set question on an enumerated tail has no structural certificate."""

    code = "undecidable-at-bound"


class TruncationInsufficient(BlurErgoptError):
    code = "truncation-insufficient"


class FamilyNotConvergent(InvalidInput):
    code = "family-not-convergent"


class NoWitnessFound(BlurErgoptError):
    code = "no-witness-found"


class TailRuleMissing(InvalidInput):
    code = "tail-rule-missing"


class RivalNotInSandwich(InvalidInput):
    code = "rival-not-in-sandwich"


class EmptyTruncation(InvalidInput):
    code = "empty-truncation"


class AcyclicGraph(InvalidInput):
    code = "acyclic-graph"


class NotClassDecomposable(InvalidInput):
    code = "not-class-decomposable"


class CertificateNotExact(BlurErgoptError):
    code = "certificate-not-exact"
    exit_status = 3


class NotInvariant(InvalidInput):
    code = "not-invariant"


class OrbitsNotCoclass(InvalidInput):
    code = "orbits-not-coclass"


class NoConnectionWithinBound(BlurErgoptError):
    code = "no-connection-within-bound"


class HypothesisViolated(InvalidInput):
    code = "hypothesis-violated"


class InvalidClassRule(InvalidInput):
    code = "invalid-class-rule"


class MalformedConfig(InvalidInput):
    code = "malformed-config"


class UnknownDemo(InvalidInput):
    code = "unknown-demo"
