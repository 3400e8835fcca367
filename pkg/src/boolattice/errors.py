"""Exception types shared across the package."""


class BoolatticeError(Exception):
    """Base class for all errors raised by this package."""


class ClosureCapExceeded(BoolatticeError):
    """The union closure grew past the configured element cap."""

    def __init__(self, max_closure: int, count: int):
        self.max_closure = max_closure
        self.count = count
        super().__init__(
            f"union closure exceeded the cap of {max_closure} elements "
            f"({count} elements found before stopping)"
        )


class ElementNotInLattice(BoolatticeError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element '{element}' is not in the lattice")


class NotFactorable(BoolatticeError):
    """A single element is not a union of quarks."""

    def __init__(self, element):
        self.element = element
        super().__init__(f"element '{element}' is not a union of quarks")


class NotFactorizable(BoolatticeError):
    """The lattice contains an element that is not a union of quarks."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"lattice is not factorizable (first gap: '{witness}')")


class QuarkTooLarge(BoolatticeError):
    """A non-isolated quark has size other than 2, so no pairing graph exists."""

    def __init__(self, quark):
        self.quark = quark
        super().__init__(
            f"non-isolated quark '{quark}' has size {len(quark)}; "
            "the pairing graph needs all non-isolated quarks to have size exactly 2"
        )


class NotAComponent(BoolatticeError):
    pass


class PreconditionViolated(BoolatticeError):
    pass


class VerificationFailed(BoolatticeError):
    """A construction verifier found a violated claim."""

    def __init__(self, claim: str, detail: str):
        self.claim = claim
        self.detail = detail
        super().__init__(f"verification claim '{claim}' failed: {detail}")


class UnknownExample(BoolatticeError):
    def __init__(self, name: str, known: tuple):
        self.name = name
        super().__init__(f"unknown example '{name}' (known: {', '.join(known)})")


class ParseError(BoolatticeError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
