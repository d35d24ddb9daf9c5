"""Built-in English language pack."""

from __future__ import annotations

from ..time_model import Relation
from . import ClauseTemplate, LanguagePack, SignalEntry, TagRule, validate_pack

MONTHS = {
    "january": 1, "february": 2, "march": 3, "april": 4, "may": 5,
    "june": 6, "july": 7, "august": 8, "september": 9, "october": 10,
    "november": 11, "december": 12,
}

NUMBER_WORDS = {
    "a": 1, "an": 1, "one": 1, "two": 2, "three": 3, "four": 4, "five": 5,
    "six": 6, "seven": 7, "eight": 8, "nine": 9, "ten": 10, "eleven": 11,
    "twelve": 12, "thirteen": 13, "fourteen": 14, "fifteen": 15,
    "sixteen": 16, "seventeen": 17, "eighteen": 18, "nineteen": 19,
    "twenty": 20, "thirty": 30, "forty": 40, "fifty": 50, "sixty": 60,
    "seventy": 70, "eighty": 80, "ninety": 90, "hundred": 100,
}

ORDINAL_WORDS = {
    "first": 1, "second": 2, "third": 3, "fourth": 4, "fifth": 5,
    "sixth": 6, "seventh": 7, "eighth": 8, "ninth": 9, "tenth": 10,
    "eleventh": 11, "twelfth": 12, "thirteenth": 13, "fourteenth": 14,
    "fifteenth": 15, "sixteenth": 16, "seventeenth": 17, "eighteenth": 18,
    "nineteenth": 19, "twentieth": 20, "twenty-first": 21,
}

DECADE_WORDS = {
    "twenties": 1920, "thirties": 1930, "forties": 1940, "fifties": 1950,
    "sixties": 1960, "seventies": 1970, "eighties": 1980, "nineties": 1990,
}

UNIT_WORDS = {
    "day": "day", "days": "day", "month": "month", "months": "month",
    "year": "year", "years": "year", "decade": "decade", "decades": "decade",
    "century": "century", "centuries": "century",
}

_MONTH = "|".join(MONTHS)
_NUM = "|".join([r"\d+"] + sorted(NUMBER_WORDS, key=len, reverse=True))
_UNIT = "|".join(sorted(UNIT_WORDS, key=len, reverse=True))
_ORDINAL = "|".join(sorted(ORDINAL_WORDS, key=len, reverse=True))
_DECADE = "|".join(DECADE_WORDS)
_TEENS = "ten|eleven|twelve|thirteen|fourteen|fifteen|sixteen|seventeen|eighteen|nineteen|twenty"
_TENS = "twenty|thirty|forty|fifty|sixty|seventy|eighty|ninety"
_ONES = "one|two|three|four|five|six|seven|eight|nine"

TE_RULES = (
    TagRule("millennium-year", "literal", r"second millennium year",
            (("value", "2000"),)),
    TagRule("this-year", "ref-year", r"this year"),
    TagRule("deictic-now", "ref-date",
            r"currently|at present|right now|nowadays"),
    TagRule("relative-ago", "relative",
            rf"(?P<n>{_NUM})\s+(?P<u>{_UNIT})\s+ago",
            (("direction", "past"),)),
    TagRule("part-decade", "decade",
            r"(?:the\s+)?(?P<part>early|late)\s+'?(?P<d>\d{3}0|\d0)s"),
    TagRule("between-years", "year-range",
            r"between\s+(?P<a>[12]\d{3})\s+and\s+(?P<b>[12]\d{3})"),
    TagRule("from-to-years", "year-range",
            r"from\s+(?P<a>[12]\d{3})\s+to\s+(?P<b>[12]\d{3})"),
    TagRule("year-pair", "year-range",
            r"(?P<a>[12]\d{3})\s*[-–]\s*(?P<b>[12]\d{3})"),
    TagRule("digit-decade", "decade", r"(?:the\s+)?'?(?P<d>\d{3}0|\d0)s"),
    TagRule("word-decade", "decade", rf"(?:the\s+)?(?P<d>{_DECADE})"),
    TagRule("ordinal-century", "century",
            r"(?:the\s+)?(?P<c>\d{1,2})(?:st|nd|rd|th)\s+century"),
    TagRule("word-century", "century", rf"(?P<c>{_ORDINAL})\s+century"),
    TagRule("month-day-or-year", "month-number",
            rf"(?P<m>{_MONTH})\s+(?P<n>\d{{1,4}})(?:,?\s+(?P<y>[12]\d{{3}}))?"),
    # word-spelled years go beyond the base rule inventory; the extension
    # marker surfaces in evaluation reports
    TagRule("spoken-year", "year",
            rf"(?P<y>(?:{_TEENS})\s+(?:{_TENS})(?:[-\s]+(?:{_ONES}))?)",
            (("extension", "spoken-year"),)),
    TagRule("quote-year", "year", r"'(?P<y>\d{2})"),
    TagRule("plain-year", "year", r"(?<!['\d])(?P<y>[12]\d{3})"),
)

SIGNALS = (
    SignalEntry("after", r"after", Relation.AFTER),
    SignalEntry("when", r"when", Relation.SIMULTANEOUS),
    SignalEntry("before", r"before", Relation.BEFORE),
    SignalEntry("during", r"during", Relation.WITHIN),
    SignalEntry("while", r"while", Relation.WITHIN),
    SignalEntry("for", r"for", Relation.WITHIN),
    SignalEntry("at_the_time_of", r"at the time of", Relation.SIMULTANEOUS),
    SignalEntry("since", r"since", Relation.AFTER),
    # constraint markers, not event linkers: they relate answers to a
    # temporal expression, never two events, so they are excluded from
    # event signal detection
    SignalEntry("on_in", r"on|in", Relation.SIMULTANEOUS,
                event_linking=False),
    SignalEntry("from_to", r"from\s+\S+\s+to", Relation.SPAN,
                event_linking=False),
    SignalEntry("about_range", r"about\s+\S+\s*[-–]\s*\S+", Relation.SPAN,
                event_linking=False),
)

CLAUSE_TEMPLATES = (
    ClauseTemplate("gerund", "When did {subject} {verb:rw} {rest}?"),
    ClauseTemplate("aux", "When {aux} {subj} {rest}?",
                   pattern=r"^(?P<subj>.+?)\s+(?P<aux>was|were|is|are)\s+(?P<rest>.+)$"),
    ClauseTemplate("tensed", "When did {subj} {verb:rw} {rest}?"),
    ClauseTemplate("fallback", "When did {clause} happen?"),
)

VERB_TABLE = {
    "died": "die", "dying": "die", "went": "go", "gone": "go", "going": "go",
    "won": "win", "held": "hold", "got": "get", "began": "begin",
    "fell": "fall", "came": "come", "born": "born", "bore": "bear",
    "took": "take", "made": "make", "ran": "run", "led": "lead",
    "left": "leave", "said": "say", "saw": "see", "built": "build",
}

VERB_LEMMAS = frozenset({
    "close", "study", "go", "order", "found", "establish", "die", "win",
    "reign", "rule", "preside", "release", "erupt", "start", "begin",
    "invent", "patent", "develop", "discover", "happen", "occur", "hold",
    "attack", "crash", "free", "return", "bear", "graduate", "get",
    "adopt", "build", "create", "launch", "open", "end", "sign", "elect",
})


def english_pack() -> LanguagePack:
    return validate_pack(LanguagePack(
        code="en",
        name="English",
        when_word="when",
        wh_words=("who", "whom", "whose", "what", "which", "where", "when",
                  "why", "how"),
        signals=SIGNALS,
        te_rules=TE_RULES,
        aux_words=("did", "does", "do", "was", "were", "is", "are", "has",
                   "have", "had"),
        clitics=(),
        verb_table=dict(VERB_TABLE),
        verb_lemmas=VERB_LEMMAS,
        verb_suffix_rules=(("d", "", True), ("ied", "y", True),
                           ("ed", "", False)),
        tensed_suffixes=("ed",),
        gerund_suffixes=("ing",),
        clause_templates=CLAUSE_TEMPLATES,
        stopwords=frozenset({
            "the", "a", "an", "of", "to", "in", "on", "at", "by", "with",
            "into", "onto", "from", "and", "or", "as",
        }),
        fillers=frozenset({
            "when", "did", "does", "do", "happen", "happens", "happened",
            "occur", "occurs", "occurred",
        }),
        equivalences=(("50s", "1950s"),),
        determiners=frozenset({"the", "a", "an"}),
        trim_words=frozenset({"just", "right", "immediately"}),
        months=dict(MONTHS),
        number_words=dict(NUMBER_WORDS),
        ordinal_words=dict(ORDINAL_WORDS),
        decade_words=dict(DECADE_WORDS),
        unit_words=dict(UNIT_WORDS),
    ))
