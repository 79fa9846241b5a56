"""Validation reports and the exception hierarchy shared by every module."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple = ()
    message: str = ""

    def __str__(self):
        loc = ", ".join(map(str, self.where))
        text = f"{self.kind}({loc})"
        return f"{text}: {self.message}" if self.message else text


@dataclass
class Report:
    """Outcome of a validator or harness run.

    An empty ``violations`` list means the checked object is valid.  Harness
    runs additionally count passing cases in ``passed`` and keep serialized
    counterexamples in ``counterexamples``.
    """

    violations: list = field(default_factory=list)
    passed: int = 0
    counterexamples: list = field(default_factory=list)

    def add(self, kind, *where, message=""):
        self.violations.append(Violation(kind, tuple(where), message))

    def extend(self, other, prefix=()):
        for v in other.violations:
            self.violations.append(Violation(v.kind, tuple(prefix) + v.where, v.message))

    @property
    def ok(self):
        return not self.violations

    @property
    def failed(self):
        return len(self.violations)

    def kinds(self):
        return [v.kind for v in self.violations]

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"ok (passed={self.passed})" if self.passed else "ok"
        return "\n".join(str(v) for v in self.violations)


class CategoryError(Exception):
    """Base class for input errors raised by this package."""


class ValidationError(CategoryError):
    def __init__(self, report, what=""):
        self.report = report
        self.what = what
        head = f"invalid {what}" if what else "invalid input"
        super().__init__(f"{head}: {report}")


class DomainMismatch(CategoryError):
    pass


class BoundaryMismatch(CategoryError):
    pass


class NotFullyFaithful(CategoryError):
    pass


class NotInvertible(CategoryError):
    pass


class PreconditionFailed(CategoryError):
    pass


class InvalidInput(CategoryError):
    pass


class NoFunctorExists(CategoryError):
    pass


class InternalError(AssertionError):
    """A property guaranteed by the theory failed; always a bug."""


def ensure(cond, message):
    if not cond:
        raise InternalError(message)
