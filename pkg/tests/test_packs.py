"""Language pack invariants, serialization and portability."""

from __future__ import annotations

import dataclasses
import random

import pytest

from tqa.errors import PackInvalid
from tqa.packs import (
    CORE_SIGNAL_BASES,
    SignalEntry,
    get_pack,
    load_pack,
    load_pack_dir,
    serialize_pack,
    validate_pack,
)
from tqa.time_model import Relation


def test_builtins_validate(en_pack, es_pack):
    assert validate_pack(en_pack) is en_pack
    assert validate_pack(es_pack) is es_pack


def test_signal_lexicon_covers_core_bases(en_pack, es_pack):
    for pack in (en_pack, es_pack):
        assert CORE_SIGNAL_BASES <= {s.base for s in pack.signals}


def test_english_at_the_time_of_is_simultaneous(en_pack):
    entries = [s for s in en_pack.signals if s.base == "at_the_time_of"]
    assert entries and entries[0].relation is Relation.SIMULTANEOUS


def test_spanish_after_maps_to_translated_surface(es_pack):
    entries = [s for s in es_pack.signals if s.base == "after"]
    assert any("después" in s.pattern for s in entries)
    assert all(s.relation is Relation.AFTER for s in entries)


def test_round_trip_both_builtins(en_pack, es_pack):
    for pack in (en_pack, es_pack):
        assert load_pack(serialize_pack(pack)) == pack


def test_round_trip_randomized(en_pack):
    rng = random.Random(42)
    for _ in range(100):
        signals = list(en_pack.signals)
        rng.shuffle(signals)
        extra = SignalEntry(base=f"syn{rng.randrange(999)}",
                            pattern=rng.choice(["as soon as", "once", "upon"]),
                            relation=rng.choice(list(Relation)),
                            event_linking=rng.random() < 0.5,
                            verified=rng.random() < 0.5)
        mutated = dataclasses.replace(
            en_pack,
            signals=tuple(signals) + (extra,),
            equivalences=en_pack.equivalences + (("x", f"y{rng.random()}"),),
            stopwords=en_pack.stopwords | {f"w{rng.randrange(999)}"},
        )
        assert load_pack(serialize_pack(mutated)) == mutated


def test_pack_dir_loading(tmp_path, es_pack):
    (tmp_path / "es.xml").write_bytes(serialize_pack(es_pack))
    assert load_pack_dir(tmp_path, "es") == es_pack
    assert get_pack("es", tmp_path) == es_pack
    with pytest.raises(PackInvalid):
        load_pack_dir(tmp_path, "fr")


def test_missing_when_word_is_invalid(en_pack):
    broken = dataclasses.replace(en_pack, when_word="")
    with pytest.raises(PackInvalid):
        validate_pack(broken)


def test_when_word_must_be_a_wh_word(en_pack):
    broken = dataclasses.replace(en_pack, when_word="tomorrow")
    with pytest.raises(PackInvalid):
        validate_pack(broken)


def test_missing_core_signal_is_invalid(en_pack):
    pruned = tuple(s for s in en_pack.signals if s.base != "during")
    with pytest.raises(PackInvalid) as err:
        validate_pack(dataclasses.replace(en_pack, signals=pruned))
    assert "during" in str(err.value)


def test_missing_fallback_template_is_invalid(en_pack):
    pruned = tuple(t for t in en_pack.clause_templates
                   if t.kind != "fallback")
    with pytest.raises(PackInvalid):
        validate_pack(dataclasses.replace(en_pack, clause_templates=pruned))


def test_duplicate_rule_names_are_invalid(en_pack):
    doubled = en_pack.te_rules + (en_pack.te_rules[0],)
    with pytest.raises(PackInvalid):
        validate_pack(dataclasses.replace(en_pack, te_rules=doubled))


def test_unknown_builtin_language():
    with pytest.raises(PackInvalid):
        get_pack("fr")


def test_verb_rewrites(en_pack, es_pack):
    assert en_pack.rewrite_verb("patented") == "patent"
    assert en_pack.rewrite_verb("released") == "release"
    assert en_pack.rewrite_verb("died") == "die"
    assert en_pack.rewrite_verb("going") == "go"
    assert en_pack.rewrite_verb("win") == "win"
    assert es_pack.rewrite_verb("reinara") == "reinó"
    assert es_pack.rewrite_verb("naciera") == "nació"
    assert es_pack.rewrite_verb("produjera") == "produjo"
    assert es_pack.rewrite_verb("fuera") == "fue"
    assert es_pack.rewrite_verb("nació") == "nació"


def test_tensed_detection_guards(en_pack, es_pack):
    assert en_pack.is_tensed("patented")
    assert not en_pack.is_tensed("United")   # capitalized unknown
    assert not en_pack.is_tensed("red")      # too short for a suffix read
    assert en_pack.is_tensed("died")
    assert es_pack.is_tensed("reinara")
    assert es_pack.is_tensed("nació")
    assert not es_pack.is_tensed("día")


def test_number_parsing(en_pack, es_pack):
    assert en_pack.parse_number("16") == 16
    assert en_pack.parse_number("five") == 5
    assert en_pack.parse_number("eighteen fifty-five") == 1855
    assert en_pack.parse_number("nineteen sixty") == 1960
    assert es_pack.parse_number("mil ochocientos cincuenta y cinco") == 1855
    assert es_pack.parse_number("mil novecientos noventa y ocho") == 1998
    assert es_pack.parse_number("trece") == 13
    assert en_pack.parse_number("banana") is None
