"""Exception types raised on inadmissible parameters."""


class DefrostError(ValueError):
    pass


class RationalParseError(DefrostError):
    pass


class UEqualsOne(DefrostError):
    def __init__(self, msg="u = 1 is not admissible for Frobenius-Euler families"):
        super().__init__(msg)


class UZero(DefrostError):
    def __init__(self, msg="u = 0 has no inverse"):
        super().__init__(msg)


class BadOrder(DefrostError):
    pass


class BadD(DefrostError):
    pass


class RootOfUnityLikeU(DefrostError):
    pass


class LambdaZero(DefrostError):
    def __init__(self, msg="lambda must be nonzero"):
        super().__init__(msg)


class ZeroConstantTerm(DefrostError):
    def __init__(self, msg="series with zero constant term is not invertible"):
        super().__init__(msg)


class IndexOutOfTriangle(DefrostError):
    pass
