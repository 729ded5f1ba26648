"""Exception hierarchy shared by the whole package."""


class InertiaCertError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(InertiaCertError, ValueError):
    pass


class CycleSyntaxError(InertiaCertError, ValueError):
    pass


class NotMember(InertiaCertError, ValueError):
    """An element that should lie in a group does not."""


class EnumerationTooLarge(InertiaCertError):
    pass


class PreconditionError(InertiaCertError, ValueError):
    """A documented precondition of an operation failed.

    ``condition`` names the failing condition so callers can report it.
    """

    def __init__(self, message: str, condition: str = ""):
        super().__init__(message)
        self.condition = condition


class RuleError(InertiaCertError):
    """A rule constructor refused to fire because a hypothesis failed."""


# Typed refusals for realizability claims. These map to CLI exit code 2.
class HypothesisRefusal(InertiaCertError):
    code = "Refused"


class NotQuasiP(HypothesisRefusal):
    code = "NotQuasiP"


class NotPGroup(HypothesisRefusal):
    code = "NotPGroup"


class ClosureNotFull(HypothesisRefusal):
    code = "ClosureNotFull"


class NotSubgroup(HypothesisRefusal):
    code = "NotSubgroup"


class NotPotentialInertia(HypothesisRefusal):
    code = "NotPotentialInertia"


class StrategyDeclined(InertiaCertError):
    """A strategy does not apply; ``open_case`` marks claims with no known proof."""

    def __init__(self, message: str, open_case: bool = False):
        super().__init__(message)
        self.open_case = open_case


class OutsideProvenRange(StrategyDeclined):
    def __init__(self, message: str):
        super().__init__(message, open_case=True)
