"""Language packs: every language-dependent resource in one declarative bundle.

A pack carries the signal lexicon (with ordering keys), the ordered temporal
expression rules, interrogative and verb lexicons, clause templates for
"When"-question synthesis, stopwords and evaluation equivalences.  Packs are
data: porting the layer to a new language means writing a pack, not code.

Packs serialize to a UTF-8 XML file (see docs/pack-format.md) and two packs
ship built in: English and Spanish.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from xml.etree import ElementTree as ET

from ..errors import PackInvalid
from ..time_model import Relation

#: Canonical signal lexicon keys every pack must cover (translated surfaces).
CORE_SIGNAL_BASES = frozenset({
    "after", "when", "before", "during", "from_to", "about_range",
    "on_in", "while", "for", "at_the_time_of", "since",
})

#: Clause template kinds understood by the question splitter.
TEMPLATE_KINDS = ("gerund", "clitic", "verb_first", "aux", "tensed", "fallback")


@dataclass(frozen=True)
class SignalEntry:
    """One signal lexicon entry: a surface pattern bound to an ordering key."""

    base: str
    pattern: str
    relation: Relation
    event_linking: bool = True
    verified: bool = True


@dataclass(frozen=True)
class TagRule:
    """One temporal expression rule: surface pattern plus normalization op."""

    name: str
    op: str
    pattern: str
    args: tuple[tuple[str, str], ...] = ()

    def arg(self, key: str, default: str | None = None) -> str | None:
        for k, v in self.args:
            if k == key:
                return v
        return default


@dataclass(frozen=True)
class ClauseTemplate:
    """One synthesis template turning a post-signal clause into a question."""

    kind: str
    output: str
    pattern: str | None = None


@dataclass(eq=True)
class LanguagePack:
    """Immutable-by-convention bundle of language knowledge."""

    code: str
    name: str
    when_word: str
    wh_words: tuple[str, ...]
    signals: tuple[SignalEntry, ...]
    te_rules: tuple[TagRule, ...]
    aux_words: tuple[str, ...]
    clitics: tuple[str, ...]
    verb_table: dict[str, str]
    verb_lemmas: frozenset[str]
    verb_suffix_rules: tuple[tuple[str, str, bool], ...]
    tensed_suffixes: tuple[str, ...]
    gerund_suffixes: tuple[str, ...]
    clause_templates: tuple[ClauseTemplate, ...]
    stopwords: frozenset[str]
    fillers: frozenset[str]
    equivalences: tuple[tuple[str, str], ...]
    determiners: frozenset[str]
    trim_words: frozenset[str]
    months: dict[str, int]
    number_words: dict[str, int]
    ordinal_words: dict[str, int]
    decade_words: dict[str, int]
    unit_words: dict[str, str]
    _regex_cache: dict = field(default_factory=dict, compare=False, repr=False)

    # -- compiled patterns ------------------------------------------------

    def compiled(self, pattern: str) -> re.Pattern:
        """Compile a rule pattern with word boundaries, case-insensitively."""
        cached = self._regex_cache.get(pattern)
        if cached is None:
            cached = re.compile(rf"(?<!\w)(?:{pattern})(?!\w)",
                                re.IGNORECASE | re.UNICODE)
            self._regex_cache[pattern] = cached
        return cached

    def modifier_regex(self) -> re.Pattern:
        """Quantity+unit phrase immediately before a signal ("four years")."""
        cached = self._regex_cache.get("\0modifier")
        if cached is None:
            numbers = "|".join([r"\d+"] + sorted(self.number_words, key=len,
                                                 reverse=True))
            units = "|".join(sorted(self.unit_words, key=len, reverse=True))
            cached = re.compile(
                rf"(?P<mod>(?:{numbers})\s+(?:{units}))\s+$",
                re.IGNORECASE | re.UNICODE)
            self._regex_cache["\0modifier"] = cached
        return cached

    # -- verb lexicon ------------------------------------------------------

    def rewrite_verb(self, word: str) -> str:
        """Normalize a verb form for synthesis (lemma or indicative form)."""
        key = word.lower()
        if key in self.verb_table:
            return self.verb_table[key]
        for suffix, replacement, checked in self.verb_suffix_rules:
            if key.endswith(suffix) and len(key) > len(suffix) + 1:
                candidate = key[:-len(suffix)] + replacement
                if not checked or candidate in self.verb_lemmas:
                    return candidate
        return word

    def is_tensed(self, word: str) -> bool:
        """Is the token a tensed verb form?  Capitalized unknowns are not
        (proper-noun guard); known irregular forms always are."""
        key = word.lower()
        if key in self.verb_table:
            return True
        if word != key:
            return False
        return any(key.endswith(s) and len(key) >= len(s) + 3
                   for s in self.tensed_suffixes)

    def is_gerund(self, word: str) -> bool:
        key = word.lower()
        if word != key:
            return False
        return any(key.endswith(s) and len(key) >= len(s) + 2
                   for s in self.gerund_suffixes)

    def is_verbish(self, word: str) -> bool:
        key = word.lower()
        return key in self.verb_lemmas or key in self.verb_table \
            or self.is_tensed(word)

    # -- number lexicon ----------------------------------------------------

    def parse_number(self, text: str) -> int | None:
        """Digits or number words to an integer; None when unknown.

        Two leading tens-scale values read as a spoken year pair
        ("eighteen fifty-five" -> 1855); otherwise values add up
        ("mil ochocientos cincuenta y cinco" -> 1855).
        """
        text = text.strip()
        if re.fullmatch(r"\d+", text):
            return int(text)
        values = []
        for token in re.split(r"[\s-]+", text.casefold()):
            if token in ("y", "and", ""):
                continue
            if token not in self.number_words:
                return None
            values.append(self.number_words[token])
        if not values:
            return None
        if len(values) >= 2 and 10 <= values[0] <= 99 \
                and 0 < sum(values[1:]) <= 99:
            return values[0] * 100 + sum(values[1:])
        return sum(values)


def validate_pack(pack: LanguagePack) -> LanguagePack:
    """Enforce pack invariants; raise PackInvalid naming the first violation."""
    if not pack.code:
        raise PackInvalid("pack code is empty")
    if not pack.when_word:
        raise PackInvalid("pack has no designated when-interrogative")
    if pack.when_word.casefold() not in {w.casefold() for w in pack.wh_words}:
        raise PackInvalid("when-interrogative missing from wh-word lexicon")
    bases = {entry.base for entry in pack.signals}
    missing = CORE_SIGNAL_BASES - bases
    if missing:
        raise PackInvalid(f"signal lexicon misses core bases: {sorted(missing)}")
    if not pack.te_rules:
        raise PackInvalid("pack has no temporal expression rules")
    names = [rule.name for rule in pack.te_rules]
    if len(names) != len(set(names)):
        raise PackInvalid("temporal expression rule names are not unique")
    for template in pack.clause_templates:
        if template.kind not in TEMPLATE_KINDS:
            raise PackInvalid(f"unknown clause template kind {template.kind!r}")
    if not any(t.kind == "fallback" for t in pack.clause_templates):
        raise PackInvalid("clause templates lack a fallback entry")
    if not pack.stopwords:
        raise PackInvalid("stopword list is empty")
    return pack


# ---------------------------------------------------------------------------
# XML serialization
# ---------------------------------------------------------------------------

_BOOL = {"1": True, "0": False, "true": True, "false": False}


def _words(parent, tag, words):
    el = ET.SubElement(parent, tag)
    el.text = " ".join(words)
    return el


def _read_words(root, tag):
    el = root.find(tag)
    if el is None or not (el.text or "").strip():
        return ()
    return tuple((el.text or "").split())


def serialize_pack(pack: LanguagePack) -> bytes:
    root = ET.Element("PACK", code=pack.code, name=pack.name,
                      when=pack.when_word)
    _words(root, "WHWORDS", pack.wh_words)

    signals = ET.SubElement(root, "SIGNALS")
    for entry in pack.signals:
        el = ET.SubElement(signals, "SIGNAL", base=entry.base,
                           relation=entry.relation.value,
                           event="1" if entry.event_linking else "0",
                           verified="1" if entry.verified else "0")
        el.text = entry.pattern

    rules = ET.SubElement(root, "TERULES")
    for rule in pack.te_rules:
        el = ET.SubElement(rules, "RULE", name=rule.name, op=rule.op)
        ET.SubElement(el, "PATTERN").text = rule.pattern
        for key, value in rule.args:
            arg = ET.SubElement(el, "ARG", key=key)
            arg.text = value

    verbs = ET.SubElement(root, "VERBS")
    _words(verbs, "AUX", pack.aux_words)
    _words(verbs, "CLITICS", pack.clitics)
    _words(verbs, "LEMMAS", sorted(pack.verb_lemmas))
    for form, target in sorted(pack.verb_table.items()):
        ET.SubElement(verbs, "FORM", {"from": form, "to": target})
    for suffix, replacement, checked in pack.verb_suffix_rules:
        ET.SubElement(verbs, "SUFFIX", {"from": suffix, "to": replacement,
                                        "checked": "1" if checked else "0"})
    _words(verbs, "TENSED", pack.tensed_suffixes)
    _words(verbs, "GERUND", pack.gerund_suffixes)

    clauses = ET.SubElement(root, "CLAUSES")
    for template in pack.clause_templates:
        el = ET.SubElement(clauses, "TEMPLATE", kind=template.kind)
        if template.pattern is not None:
            ET.SubElement(el, "PATTERN").text = template.pattern
        ET.SubElement(el, "OUTPUT").text = template.output

    _words(root, "STOPWORDS", sorted(pack.stopwords))
    _words(root, "FILLERS", sorted(pack.fillers))
    for a, b in pack.equivalences:
        ET.SubElement(root, "EQUIV", a=a, b=b)
    _words(root, "DETERMINERS", sorted(pack.determiners))
    _words(root, "TRIM", sorted(pack.trim_words))

    lexicon = ET.SubElement(root, "LEXICON")
    for kind, table in (("month", pack.months), ("number", pack.number_words),
                        ("ordinal", pack.ordinal_words),
                        ("decade", pack.decade_words)):
        for key, value in sorted(table.items()):
            ET.SubElement(lexicon, "ENTRY", kind=kind, key=key,
                          value=str(value))
    for key, value in sorted(pack.unit_words.items()):
        ET.SubElement(lexicon, "ENTRY", kind="unit", key=key, value=value)

    tree = ET.ElementTree(root)
    ET.indent(tree, space="  ")
    return ET.tostring(root, encoding="utf-8", xml_declaration=True)


def load_pack(source) -> LanguagePack:
    """Load and validate a pack from a path, byte string or file object."""
    if isinstance(source, bytes):
        root = ET.fromstring(source)
    elif isinstance(source, (str, Path)):
        root = ET.parse(source).getroot()
    else:
        root = ET.parse(source).getroot()
    if root.tag != "PACK":
        raise PackInvalid(f"root element is {root.tag!r}, expected PACK")

    signals = []
    for el in root.findall("SIGNALS/SIGNAL"):
        signals.append(SignalEntry(
            base=el.get("base", ""),
            pattern=(el.text or "").strip(),
            relation=Relation(el.get("relation", "")),
            event_linking=_BOOL.get(el.get("event", "1"), True),
            verified=_BOOL.get(el.get("verified", "1"), True)))

    te_rules = []
    for el in root.findall("TERULES/RULE"):
        pattern_el = el.find("PATTERN")
        args = tuple((arg.get("key", ""), arg.text or "")
                     for arg in el.findall("ARG"))
        te_rules.append(TagRule(
            name=el.get("name", ""), op=el.get("op", ""),
            pattern=(pattern_el.text or "") if pattern_el is not None else "",
            args=args))

    verbs = root.find("VERBS")
    if verbs is None:
        raise PackInvalid("pack has no VERBS section")
    verb_table = {el.get("from", ""): el.get("to", "")
                  for el in verbs.findall("FORM")}
    suffix_rules = tuple((el.get("from", ""), el.get("to", ""),
                          _BOOL.get(el.get("checked", "0"), False))
                         for el in verbs.findall("SUFFIX"))

    templates = []
    for el in root.findall("CLAUSES/TEMPLATE"):
        pattern_el = el.find("PATTERN")
        output_el = el.find("OUTPUT")
        templates.append(ClauseTemplate(
            kind=el.get("kind", ""),
            output=(output_el.text or "") if output_el is not None else "",
            pattern=(pattern_el.text or "") if pattern_el is not None else None))

    months, numbers, ordinals, decades, units = {}, {}, {}, {}, {}
    tables = {"month": months, "number": numbers, "ordinal": ordinals,
              "decade": decades}
    for el in root.findall("LEXICON/ENTRY"):
        kind, key, value = el.get("kind"), el.get("key", ""), el.get("value", "")
        if kind == "unit":
            units[key] = value
        elif kind in tables:
            tables[kind][key] = int(value)
        else:
            raise PackInvalid(f"unknown lexicon kind {kind!r}")

    pack = LanguagePack(
        code=root.get("code", ""),
        name=root.get("name", ""),
        when_word=root.get("when", ""),
        wh_words=_read_words(root, "WHWORDS"),
        signals=tuple(signals),
        te_rules=tuple(te_rules),
        aux_words=_read_words(verbs, "AUX"),
        clitics=_read_words(verbs, "CLITICS"),
        verb_table=verb_table,
        verb_lemmas=frozenset(_read_words(verbs, "LEMMAS")),
        verb_suffix_rules=suffix_rules,
        tensed_suffixes=_read_words(verbs, "TENSED"),
        gerund_suffixes=_read_words(verbs, "GERUND"),
        clause_templates=tuple(templates),
        stopwords=frozenset(_read_words(root, "STOPWORDS")),
        fillers=frozenset(_read_words(root, "FILLERS")),
        equivalences=tuple((el.get("a", ""), el.get("b", ""))
                           for el in root.findall("EQUIV")),
        determiners=frozenset(_read_words(root, "DETERMINERS")),
        trim_words=frozenset(_read_words(root, "TRIM")),
        months=months,
        number_words=numbers,
        ordinal_words=ordinals,
        decade_words=decades,
        unit_words=units,
    )
    return validate_pack(pack)


def load_pack_dir(directory, code: str) -> LanguagePack:
    """Load <directory>/<code>.xml."""
    path = Path(directory) / f"{code}.xml"
    if not path.is_file():
        raise PackInvalid(f"no pack file {path}")
    return load_pack(path)


def builtin_english() -> LanguagePack:
    from .english import english_pack
    return english_pack()


def builtin_spanish() -> LanguagePack:
    from .spanish import spanish_pack
    return spanish_pack()


def get_pack(code: str, pack_dir=None) -> LanguagePack:
    """Resolve a language code to a pack, preferring an explicit pack dir."""
    if pack_dir is not None:
        return load_pack_dir(pack_dir, code)
    builtin = {"en": builtin_english, "es": builtin_spanish}.get(code)
    if builtin is None:
        raise PackInvalid(f"no built-in pack for language {code!r}")
    return builtin()
