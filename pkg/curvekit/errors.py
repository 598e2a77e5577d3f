class CurvekitError(RuntimeError):
    pass


class MalformedKeyError(CurvekitError):
    pass


class InessentialCurveError(CurvekitError):
    pass


class UnsupportedError(CurvekitError):
    pass
