__all__ = (
    "InvalidInputError",
    "ContractViolationError",
    "DegenerateChannelError",
    "InvalidConfigurationError",
    "UnusableSlotAccessWarning",
)


class InvalidInputError(ValueError):
    def __init__(self, argument_name: str, reason: str):
        super().__init__(f"Invalid value for '{argument_name}': {reason}.")


class ContractViolationError(ValueError):
    def __init__(self, operation_name: str, contract: str):
        super().__init__(
            f"'{operation_name}' requires that {contract}, but "
            "the given input breaks this contract."
        )


class DegenerateChannelError(ArithmeticError):
    def __init__(self, reason: str):
        super().__init__(
            f"Degenerate channel: {reason}. No beam direction or "
            "equalizer gain is defined for this realization."
        )


class InvalidConfigurationError(ValueError):
    def __init__(self, key: str, reason: str):
        super().__init__(f"Invalid configuration '{key}': {reason}.")


class UnusableSlotAccessWarning(RuntimeWarning):
    def __init__(self, slot_count: int):
        super().__init__(
            f"Found {slot_count} masked slot(s) in a block that should be "
            "detected. Multiband decoding marks unprotected slots as "
            "unusable, these blocks carry no data and are skipped."
        )
