"""Error taxonomy shared by every module. The CLI maps these to exit codes."""


class OuterdomError(Exception):
    """Base class for all errors raised by outerdom."""


class InputError(OuterdomError, ValueError):
    """Raised when an input violates an operation's precondition."""


class CapabilityError(OuterdomError):
    """Raised when a valid input exceeds what an exhaustive method is capped to handle."""


class ProtocolError(OuterdomError):
    """Raised when a node program breaks its declared message protocol."""


class VerificationFailure(OuterdomError):
    """Raised when an experiment observes a violated bound."""


EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFICATION_FAILURE = 2
EXIT_CAPABILITY_ERROR = 3
