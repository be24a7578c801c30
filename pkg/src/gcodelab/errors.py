"""Exception types shared across the package."""


class VerificationError(RuntimeError):
    """A structural guarantee failed: either the input violates a documented
    precondition of a verifier, or the implementation has a bug.  Verification
    sweeps catch this and record the offending instance."""


class GuardExceeded(RuntimeError):
    """Codeword enumeration would exceed the configured guard."""


class UnsupportedCover(RuntimeError):
    """The projective cover of the trivial module is not computable for this
    group/characteristic pair; callers must handle this explicitly."""
