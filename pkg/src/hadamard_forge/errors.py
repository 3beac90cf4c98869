"""Exception hierarchy.

Verification failures are never raised; they are reported through
:class:`~hadamard_forge.verify.Certificate`.  Everything here signals a bad
input or a broken internal invariant.
"""


class HadamardError(Exception):
    """Base class for all errors raised by this package."""


# -- fields -----------------------------------------------------------------

class NotPrimeError(HadamardError, ValueError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class EvenCharacteristicError(HadamardError, ValueError):
    def __init__(self):
        super().__init__("characteristic 2 fields are not supported")


class FieldMismatchError(HadamardError, ValueError):
    pass


class SizeCapError(HadamardError, ValueError):
    pass


class NotPrimePowerError(HadamardError, ValueError):
    def __init__(self, q, note=""):
        msg = f"q = {q} is not an odd prime power"
        if note:
            msg += f"; {note}"
        super().__init__(msg)
        self.q = q


# -- matrices ---------------------------------------------------------------

class ShapeMismatchError(HadamardError, ValueError):
    pass


class CheckedOverflowError(HadamardError, OverflowError):
    pass


class ZeroEntryError(HadamardError, ValueError):
    def __init__(self, i, j):
        super().__init__(f"entry ({i}, {j}) is 0; only +1/-1 matrices can be packed")
        self.i, self.j = i, j


# -- constructions ----------------------------------------------------------

class WrongResidueError(HadamardError, ValueError):
    pass


class SymmetryMismatchError(HadamardError, ValueError):
    pass


class NotSkewHadamardError(HadamardError, ValueError):
    pass


class UnreachableError(HadamardError, ValueError):
    def __init__(self, order, attempts):
        detail = "; ".join(attempts) if attempts else "no candidate chains"
        super().__init__(f"no skew Hadamard seed of order {order}: {detail}")
        self.order = order
        self.attempts = list(attempts)


class ConstructionError(HadamardError, RuntimeError):
    """A constructor produced an output that failed its own re-verification."""


class CongruenceViolationError(HadamardError, ValueError):
    pass


class NoSkewSeedError(HadamardError, ValueError):
    pass


# -- io ---------------------------------------------------------------------

class ParseError(HadamardError, ValueError):
    def __init__(self, message, line, column=None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column
