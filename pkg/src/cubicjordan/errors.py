"""Exception hierarchy.

``InputError`` covers malformed or out-of-range input (CLI exit code 2);
``VerificationError`` subclasses report a failed certificate (exit code 1)
and carry a reproducing witness where one exists.
"""


class CubicJordanError(Exception):
    module = "core"
    operation = ""

    def __init__(self, message, *, witness=None, module=None, operation=None):
        super().__init__(message)
        self.witness = witness
        if module is not None:
            self.module = module
        if operation is not None:
            self.operation = operation

    def to_json(self):
        out = {
            "error": type(self).__name__,
            "module": self.module,
            "operation": self.operation,
            "message": str(self),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class InputError(CubicJordanError, ValueError):
    pass


class UnknownAlgebra(InputError):
    module = "catalog"
    operation = "catalog_get"


class VerificationError(CubicJordanError):
    pass


class CommutativityError(VerificationError):
    module, operation = "jordan", "validate"


class UnitLawError(VerificationError):
    module, operation = "jordan", "validate"


class JordanIdentityError(VerificationError):
    module, operation = "jordan", "validate"


class AssociativityError(VerificationError):
    module, operation = "jordan", "from_associative"


class CompositionError(VerificationError):
    module, operation = "jordan", "hermitian_h3"


class InterpolationFailure(VerificationError):
    module, operation = "jordan", "generic_min_poly"


class NotInvertible(VerificationError):
    module, operation = "jordan", "invert"


class RankError(InputError):
    module = "jordan"


class StructuralCheckFailed(VerificationError):
    module, operation = "cubic", "structural_G"


class GenericityFailure(VerificationError):
    module, operation = "cubic", "twisted_cubic_through"


class NotProportional(VerificationError):
    module, operation = "cremona", "verify_involution"


class DegenerateQ(VerificationError):
    module, operation = "variety", "oadp_solve"
