class FracGalException(Exception):

    @property
    def msg(self):
        return self.args[0]

    @msg.setter
    def msg(self, msg):
        self.args = (msg,) + self.args[1:]


class FracGalError(FracGalException):
    pass


class FracGalUsageError(FracGalError):
    pass


class FracGalInvalidParameterError(FracGalUsageError):
    pass


class FracGalGridMismatchError(FracGalUsageError):
    pass


class FracGalOverflowError(FracGalError):
    pass


class FracGalExpressionError(FracGalError):
    pass


class FracGalSyntaxError(FracGalExpressionError):

    def __init__(self, offset, msg):
        super(FracGalSyntaxError, self).__init__(
            "Syntax error at offset {}: {}".format(offset, msg))
        self.offset = offset


class FracGalUnknownIdentifierError(FracGalExpressionError):

    def __init__(self, name, offset, msg):
        super(FracGalUnknownIdentifierError, self).__init__(msg)
        self.name = name
        self.offset = offset


class FracGalDomainError(FracGalExpressionError):
    """
    Raised when an expression is evaluated outside of the domain of one of
    its operations (e.g. sqrt of a negative number, division by zero)
    """

    def __init__(self, subexpr, msg):
        super(FracGalDomainError, self).__init__(msg)
        self.subexpr = subexpr


class FracGalAssumptionError(FracGalUsageError):
    """
    Raised when a problem violates one of the standing assumptions on the
    coefficients/forcing, (a1) boundedness, (a2) symmetry, (a3) ellipticity
    or (a4) forcing regularity
    """

    def __init__(self, assumption, msg):
        super(FracGalAssumptionError, self).__init__(
            "[{}] {}".format(assumption, msg))
        self.assumption = assumption


class FracGalEllipticityError(FracGalAssumptionError):

    def __init__(self, theta_hat, msg):
        super(FracGalEllipticityError, self).__init__('a3', msg)
        self.theta_hat = theta_hat


class FracGalSymmetryError(FracGalAssumptionError):

    def __init__(self, msg):
        super(FracGalSymmetryError, self).__init__('a2', msg)


class FracGalProblemFileError(FracGalUsageError):
    pass


class FracGalSolverError(FracGalError):
    pass


class FracGalConvergenceError(FracGalSolverError):

    def __init__(self, last_ratio, msg):
        super(FracGalConvergenceError, self).__init__(msg)
        self.last_ratio = last_ratio


class FracGalNaNError(FracGalSolverError):

    def __init__(self, node, msg):
        super(FracGalNaNError, self).__init__(msg)
        self.node = node


class FracGalSingularStepError(FracGalSolverError):

    def __init__(self, node, eigenvalue, msg):
        super(FracGalSingularStepError, self).__init__(msg)
        self.node = node
        self.eigenvalue = eigenvalue