"""Answer recomposition: temporal filtering and ordering-key compatibility.

Candidate answers to the focus question are filtered against the temporal
expressions of the original question, then checked for compatibility with
the restriction answer under the signal's ordering key.  Backend rank order
is preserved throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnanchoredValue, UndatedAnswer
from .time_model import (
    DayInterval,
    Relation,
    TimeValue,
    relation_holds,
    to_interval,
)

#: Diagnostic: an undated answer passed the expression filter unchecked.
UNDATED_PASSTHROUGH = "UNDATED_PASSTHROUGH"
#: Diagnostic: an undated answer could not enter an ordering check.
UNDATED_ANSWER = "UNDATED_ANSWER"
#: Diagnostic: a keyed flow found no restriction answer; result is empty.
NO_RESTRICTION_ANSWER = "NO_RESTRICTION_ANSWER"


@dataclass(frozen=True)
class DatedAnswer:
    """A ranked candidate answer with an optional attached date."""

    text: str
    rank: int
    value: TimeValue | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")

    @property
    def interval(self) -> DayInterval | None:
        if self.value is None:
            return None
        try:
            return to_interval(self.value)
        except UnanchoredValue:
            return None


@dataclass(frozen=True)
class ComplexAnswer:
    """Final answer set for a complex question, in backend order."""

    answers: tuple[DatedAnswer, ...]
    restriction_answer: DatedAnswer | None
    applied_key: Relation | None
    diagnostics: tuple[str, ...] = ()


def filter_by_te(answers, constraint: DayInterval) -> list[DatedAnswer]:
    """Keep answers whose interval overlaps the constraint; undated answers
    pass through (they cannot be ruled out).  Order is preserved."""
    kept = []
    for answer in answers:
        interval = answer.interval
        if interval is None or interval.overlaps(constraint):
            kept.append(answer)
    return kept


def compatible(key: Relation, focus: DatedAnswer,
               restriction: DatedAnswer) -> bool:
    """Does the focus answer's date satisfy the ordering against the
    restriction answer's date?"""
    f1, f2 = focus.interval, restriction.interval
    if f1 is None or f2 is None:
        raise UndatedAnswer(
            f"cannot order {focus.text!r} against {restriction.text!r}")
    if key is Relation.SPAN:
        # with a single restriction period the span bounds collapse onto it
        return relation_holds(Relation.WITHIN, f1, f2)
    return relation_holds(key, f1, f2)


def recompose(focus_answers, restriction_answers, key: Relation | None,
              te_constraints) -> ComplexAnswer:
    """Build the final answer set.

    Every constraint interval filters both answer lists; the best surviving
    restriction answer supplies the reference date; focus answers that
    satisfy the ordering key survive.  Without a key (simple questions) the
    filtered focus list is the answer.
    """
    focus = list(focus_answers)
    restriction = list(restriction_answers)
    diagnostics = []
    for constraint in te_constraints:
        if any(a.interval is None for a in focus + restriction):
            if UNDATED_PASSTHROUGH not in diagnostics:
                diagnostics.append(UNDATED_PASSTHROUGH)
        focus = filter_by_te(focus, constraint)
        restriction = filter_by_te(restriction, constraint)

    if key is None:
        return ComplexAnswer(tuple(focus), None, None, tuple(diagnostics))

    if not restriction:
        diagnostics.append(NO_RESTRICTION_ANSWER)
        return ComplexAnswer((), None, key, tuple(diagnostics))

    reference = restriction[0]
    kept = []
    for answer in focus:
        try:
            if compatible(key, answer, reference):
                kept.append(answer)
        except UndatedAnswer:
            if UNDATED_ANSWER not in diagnostics:
                diagnostics.append(UNDATED_ANSWER)
    return ComplexAnswer(tuple(kept), reference, key, tuple(diagnostics))
