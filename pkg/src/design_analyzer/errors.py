"""Exception hierarchy shared by every analysis stage."""

from __future__ import annotations


class AnalysisError(Exception):
    """Base class for failures the CLI reports with exit status 1."""


class ParseError(AnalysisError):
    def __init__(self, message: str, file: str | None = None, line: int | None = None):
        self.file = file
        self.line = line
        where = ""
        if file is not None:
            where = f"{file}:{line}: " if line is not None else f"{file}: "
        super().__init__(f"{where}{message}")


class UnterminatedComment(ParseError):
    pass


class UnterminatedString(ParseError):
    pass


class UnbalancedBraces(ParseError):
    pass


class MissingClassName(ParseError):
    pass


class EmptyCorpus(AnalysisError):
    pass


class UnknownClass(AnalysisError):
    pass


class EmptyMatrix(AnalysisError):
    pass


class NonSymmetricInput(AnalysisError):
    pass


class NoConvergence(AnalysisError):
    pass


class ZeroTrace(AnalysisError):
    pass


class KTooLarge(AnalysisError):
    pass


class WrongOrientation(AnalysisError):
    pass
