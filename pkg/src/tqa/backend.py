"""Pluggable QA backend capability, fixture implementation and orchestrator.

Sub-questions produced by decomposition are answered by any backend that
maps a question to ranked, optionally dated answers.  The shipped backend
is a deterministic fixture store loaded from XML, standing in for a live
QA service so that end-to-end behavior is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Protocol
from xml.etree import ElementTree as ET

from .decomposition import DecomposedQuestion, decompose
from .errors import SchemaViolation, UnsplittableQuestion
from .packs import LanguagePack
from .recomposition import ComplexAnswer, DatedAnswer, recompose
from .tagger import ReferenceDate, TemporalExpressionTag
from .textnorm import normalize_key
from .time_model import parse_value

#: Diagnostic: the question could not be split; no answers were produced.
UNSPLITTABLE = "UNSPLITTABLE"


@dataclass(frozen=True)
class BackendQuery:
    question: str
    language: str

    def __post_init__(self):
        if not self.question.strip():
            raise ValueError("query question is empty")


class QABackend(Protocol):
    """Capability: ranked, optionally dated answers for a simple question."""

    def answer(self, query: BackendQuery) -> list[DatedAnswer]:
        ...


@dataclass
class FixtureStore:
    """Deterministic backend: normalized question key -> ranked answers."""

    entries: dict[str, tuple[DatedAnswer, ...]]
    ref: ReferenceDate
    language: str = "en"
    strict_keys: bool = False

    def __post_init__(self):
        for key, answers in self.entries.items():
            ranks = [a.rank for a in answers]
            if ranks != list(range(1, len(ranks) + 1)):
                raise SchemaViolation(
                    f"fixture {key!r}: ranks {ranks} not contiguous from 1")
            if not self.strict_keys and key != normalize_key(key):
                raise SchemaViolation(f"fixture key {key!r} not normalized")

    def answer(self, query: BackendQuery) -> list[DatedAnswer]:
        key = query.question if self.strict_keys \
            else normalize_key(query.question)
        return list(self.entries.get(key, ()))


def backend_answer(query: BackendQuery, store: FixtureStore) -> list[DatedAnswer]:
    """Exact-key fixture lookup; an unknown question yields no answers."""
    return store.answer(query)


def _parse_answer(el: ET.Element, key: str) -> DatedAnswer:
    try:
        rank = int(el.get("rank", ""))
    except ValueError:
        raise SchemaViolation(f"fixture {key!r}: bad rank {el.get('rank')!r}")
    value_text = el.get("value")
    value = parse_value(value_text) if value_text else None
    return DatedAnswer(text=(el.text or "").strip(), rank=rank, value=value)


def load_fixtures(source, strict_keys: bool = False) -> FixtureStore:
    """Load a fixture file: FIXTURES[@ref,@lang] containing FQ[@key]/A rows."""
    if isinstance(source, bytes):
        root = ET.fromstring(source)
    else:
        root = ET.parse(source).getroot()
    if root.tag != "FIXTURES":
        raise SchemaViolation(f"root element {root.tag!r}, expected FIXTURES")
    ref_text = root.get("ref", "")
    try:
        ref = ReferenceDate.fromisoformat(ref_text)
    except ValueError:
        raise SchemaViolation(f"bad fixture reference date {ref_text!r}")
    entries = {}
    for fq in root.findall("FQ"):
        key = fq.get("key", "")
        if not key:
            raise SchemaViolation("fixture entry without key")
        answers = tuple(sorted((_parse_answer(a, key) for a in fq.findall("A")),
                               key=lambda a: a.rank))
        entries[key] = answers
    return FixtureStore(entries=entries, ref=ref,
                        language=root.get("lang", "en"),
                        strict_keys=strict_keys)


def write_fixtures(store: FixtureStore) -> bytes:
    root = ET.Element("FIXTURES", ref=store.ref.isoformat(),
                      lang=store.language)
    for key in store.entries:
        fq = ET.SubElement(root, "FQ", key=key)
        for answer in store.entries[key]:
            attrs = {"rank": str(answer.rank)}
            if answer.value is not None:
                attrs["value"] = answer.value.canonical
            el = ET.SubElement(fq, "A", attrs)
            el.text = answer.text
    tree = ET.ElementTree(root)
    ET.indent(tree, space="  ")
    return ET.tostring(root, encoding="utf-8", xml_declaration=True)


def shipped_fixtures(language: str) -> FixtureStore:
    """Fixture store bundled with the package for the given language."""
    path = Path(__file__).parent / "data" / f"fixtures_{language}.xml"
    if not path.is_file():
        raise SchemaViolation(f"no shipped fixtures for language {language!r}")
    return load_fixtures(path)


def answer_complex_question(question: str, pack: LanguagePack,
                            ref: ReferenceDate, backend: QABackend,
                            tes: list[TemporalExpressionTag] | None = None,
                            ) -> ComplexAnswer:
    """Decompose, query the backend, recompose.  Never raises for content
    problems: failures surface as diagnostics with an empty answer list."""
    try:
        analysis = decompose(question, pack, ref, tes=tes)
    except UnsplittableQuestion:
        return ComplexAnswer((), None, None, (UNSPLITTABLE,))

    constraints = [t.interval for t in analysis.tes if t.interval is not None]
    if analysis.qtype in (1, 2):
        focus = backend.answer(BackendQuery(question, pack.code))
        result = recompose(focus, [], None, constraints)
    else:
        focus = backend.answer(BackendQuery(analysis.q_focus, pack.code))
        restriction = backend.answer(
            BackendQuery(analysis.q_restriction, pack.code))
        result = recompose(focus, restriction, analysis.signal.key,
                           constraints)
    diagnostics = analysis.diagnostics + result.diagnostics
    return ComplexAnswer(result.answers, result.restriction_answer,
                         result.applied_key, diagnostics)


def decompose_question(question: str, pack: LanguagePack, ref: ReferenceDate,
                       tes=None) -> DecomposedQuestion:
    """Convenience re-export used by the CLI and evaluation harness."""
    return decompose(question, pack, ref, tes=tes)
