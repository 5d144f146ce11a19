"""Exception hierarchy shared by every module."""


class CrembedError(Exception):
    """Base class for all errors raised by this package."""


class EvenDimensionError(CrembedError):
    pass


class OddDimensionError(CrembedError):
    pass


class WrongDimensionError(CrembedError):
    pass


class DimensionMismatchError(CrembedError):
    pass


class DimensionTooSmallError(CrembedError):
    pass


class UnknownEntriesError(CrembedError):
    pass


class HypothesisFailureError(CrembedError):
    pass


class ParityError(CrembedError):
    """A Lai index numerator came out odd, so the pairing data is inconsistent."""


class GeneratorCountMismatchError(CrembedError):
    pass


class IndeterminateSemiCharacteristicError(CrembedError):
    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(
            "semi-characteristic undetermined; missing mod-2 Betti numbers in degrees "
            + ", ".join(str(i) for i in self.missing)
        )


class ValidationFailureError(CrembedError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# input / parse errors


class InputError(CrembedError):
    """Malformed user input (presentation text, descriptor file, matrix file)."""


class PresentationSyntaxError(InputError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class DuplicateGeneratorError(InputError):
    pass


class UnknownGeneratorError(InputError):
    pass


class DescriptorSyntaxError(InputError):
    def __init__(self, message, line):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownKeyError(DescriptorSyntaxError):
    pass


class DuplicateKeyError(DescriptorSyntaxError):
    pass
