"""Exception hierarchy shared by every ringcover module."""


class RingCoverError(Exception):
    """Base class for all library errors."""


class MalformedSpec(RingCoverError):
    pass


class AxiomViolation(RingCoverError):
    def __init__(self, law, witness):
        self.law = law
        self.witness = tuple(witness)
        super().__init__(f"{law} fails at {self.witness}")


class UnknownConstructor(RingCoverError):
    pass


class NotPrimePower(RingCoverError):
    pass


class NotPrime(RingCoverError):
    pass


class ReducibleModulus(RingCoverError):
    pass


class NotAnIdeal(RingCoverError):
    pass


class NotAUnit(RingCoverError):
    pass


class NotCommutative(RingCoverError):
    pass


class NotAComplement(RingCoverError):
    pass


class NotPrimePowerCharacteristic(RingCoverError):
    pass


class HypothesisViolated(RingCoverError):
    def __init__(self, which):
        self.which = which
        super().__init__(f"hypothesis violated: {which}")


class UnknownTheoremId(RingCoverError):
    pass


class BoundExceeded(RingCoverError):
    """A configured size bound was exceeded."""

    def __init__(self, what, size, bound):
        self.what, self.size, self.bound = what, size, bound
        super().__init__(f"{what}: size {size} exceeds bound {bound}")


class LatticeBoundExceeded(BoundExceeded):
    pass


class SearchBoundExceeded(BoundExceeded):
    pass


class Timeout(RingCoverError):
    def __init__(self, budget, partial=None):
        self.budget = budget
        self.partial = partial
        super().__init__(f"time budget of {budget}s exhausted")
