"""Built-in Spanish language pack.

Signal surfaces are reconstructed from Spanish question data plus direct
translation of the English lexicon; entries without direct evidence are
marked unverified.
"""

from __future__ import annotations

from ..time_model import Relation
from . import ClauseTemplate, LanguagePack, SignalEntry, TagRule, validate_pack

MONTHS = {
    "enero": 1, "febrero": 2, "marzo": 3, "abril": 4, "mayo": 5, "junio": 6,
    "julio": 7, "agosto": 8, "septiembre": 9, "setiembre": 9, "octubre": 10,
    "noviembre": 11, "diciembre": 12,
}

NUMBER_WORDS = {
    "un": 1, "una": 1, "uno": 1, "dos": 2, "tres": 3, "cuatro": 4,
    "cinco": 5, "seis": 6, "siete": 7, "ocho": 8, "nueve": 9, "diez": 10,
    "once": 11, "doce": 12, "trece": 13, "catorce": 14, "quince": 15,
    "dieciséis": 16, "dieciseis": 16, "diecisiete": 17, "dieciocho": 18,
    "diecinueve": 19, "veinte": 20, "treinta": 30, "cuarenta": 40,
    "cincuenta": 50, "sesenta": 60, "setenta": 70, "ochenta": 80,
    "noventa": 90, "cien": 100, "ciento": 100, "doscientos": 200,
    "trescientos": 300, "cuatrocientos": 400, "quinientos": 500,
    "seiscientos": 600, "setecientos": 700, "ochocientos": 800,
    "novecientos": 900, "mil": 1000,
}

ORDINAL_WORDS = {
    "primer": 1, "primero": 1, "segundo": 2, "tercer": 3, "tercero": 3,
    "cuarto": 4, "quinto": 5, "sexto": 6, "séptimo": 7, "octavo": 8,
    "noveno": 9, "décimo": 10,
}

UNIT_WORDS = {
    "día": "day", "días": "day", "mes": "month", "meses": "month",
    "año": "year", "años": "year", "década": "decade", "décadas": "decade",
    "siglo": "century", "siglos": "century",
}

_NUM = "|".join([r"\d+"] + sorted(NUMBER_WORDS, key=len, reverse=True))
_UNIT = "|".join(sorted(UNIT_WORDS, key=len, reverse=True))
_MONTH = "|".join(MONTHS)
_HUNDREDS = ("cien|doscientos|trescientos|cuatrocientos|quinientos|"
             "seiscientos|setecientos|ochocientos|novecientos")
_TENS = ("diez|once|doce|trece|catorce|quince|dieciséis|dieciseis|"
         "diecisiete|dieciocho|diecinueve|veinte|treinta|cuarenta|"
         "cincuenta|sesenta|setenta|ochenta|noventa")
_ONES = "uno|dos|tres|cuatro|cinco|seis|siete|ocho|nueve"

TE_RULES = (
    TagRule("segundo-milenio", "literal", r"en el año del segundo milenio",
            (("value", "2000"),)),
    TagRule("este-año", "ref-year", r"este año"),
    TagRule("deictic-now", "ref-date", r"actualmente|en la actualidad"),
    TagRule("últimos-años", "recent-years", r"los últimos años",
            (("years", "5"),)),
    TagRule("hace-relative", "relative",
            rf"hace\s+(?P<n>{_NUM})\s+(?P<u>{_UNIT})",
            (("direction", "past"),)),
    TagRule("entre-años", "year-range",
            r"entre\s+(?P<a>[12]\d{3})\s+y\s+(?P<b>[12]\d{3})"),
    TagRule("de-a-años", "year-range",
            r"de\s+(?P<a>[12]\d{3})\s+a\s+(?P<b>[12]\d{3})"),
    TagRule("par-de-años", "year-range",
            r"(?P<a>[12]\d{3})\s*[-–]\s*(?P<b>[12]\d{3})"),
    TagRule("década-de", "decade", r"la década de (?P<d>[12]\d{2}0)"),
    TagRule("los-años", "decade", r"los años (?P<d>\d0)"),
    TagRule("siglo-romano", "century",
            r"(?:el\s+)?siglo\s+(?P<c>[IVXLCDMivxlcdm]+)"),
    TagRule("día-de-mes", "month-number",
            rf"(?:el\s+)?(?P<n>\d{{1,2}})\s+de\s+(?P<m>{_MONTH})"
            rf"(?:\s+de\s+(?P<y>[12]\d{{3}}))?"),
    # word-spelled years go beyond the base rule inventory; the extension
    # marker surfaces in evaluation reports
    TagRule("año-en-palabras", "year",
            rf"(?P<y>mil(?:\s+(?:{_HUNDREDS}))?(?:\s+(?:{_TENS}))?"
            rf"(?:\s+y\s+(?:{_ONES}))?)",
            (("extension", "spoken-year"),)),
    TagRule("el-año-n", "year", r"el año (?P<y>\d{2,4})(?!\d)"),
    TagRule("el-n", "year", r"el (?P<y>\d{2})"),
    TagRule("año-simple", "year", r"(?<!['\d])(?P<y>[12]\d{3})"),
)

SIGNALS = (
    SignalEntry("after", r"después(?:\s+de(?:\s+que)?)?", Relation.AFTER),
    SignalEntry("after", r"tras", Relation.AFTER, verified=False),
    SignalEntry("when", r"cuando", Relation.SIMULTANEOUS),
    SignalEntry("before", r"antes(?:\s+de(?:\s+que)?)?", Relation.BEFORE),
    SignalEntry("during", r"durante", Relation.WITHIN),
    SignalEntry("while", r"mientras", Relation.WITHIN, verified=False),
    SignalEntry("for", r"durante", Relation.WITHIN, verified=False),
    SignalEntry("at_the_time_of",
                r"en el momento de|en la época de|en tiempos de",
                Relation.SIMULTANEOUS, verified=False),
    SignalEntry("since", r"desde", Relation.AFTER, verified=False),
    SignalEntry("on_in", r"en", Relation.SIMULTANEOUS, event_linking=False),
    SignalEntry("from_to", r"desde\s+\S+\s+hasta", Relation.SPAN,
                event_linking=False, verified=False),
    SignalEntry("about_range", r"alrededor de", Relation.SPAN,
                event_linking=False, verified=False),
)

CLAUSE_TEMPLATES = (
    ClauseTemplate("clitic", "¿Cuándo {clitic} {verb:rw} {rest}?"),
    ClauseTemplate("verb_first", "¿Cuándo {verb:rw} {rest}?"),
    ClauseTemplate("aux", "¿Cuándo {aux:rw} {part} {subj} {rest}?",
                   pattern=(r"^(?P<subj>.+?)\s+(?P<aux>fue|fueron|era|eran|"
                            r"fuera|fueran)\s+(?P<part>\S+)\s*(?P<rest>.*)$")),
    ClauseTemplate("tensed", "¿Cuándo {verb:rw} {subj} {rest}?"),
    ClauseTemplate("fallback", "¿Cuándo ocurrió {clause}?"),
)

VERB_TABLE = {
    "produjera": "produjo", "fuera": "fue", "fueran": "fueron",
    "adopte": "adoptará", "naciera": "nació", "ganara": "ganó",
    "estrenara": "estrenó", "reinara": "reinó", "hiciera": "hizo",
    "tuviera": "tuvo", "dijera": "dijo", "celebrara": "celebró",
    "fundara": "fundó", "descubriera": "descubrió",
}

VERB_LEMMAS = frozenset({
    "fundó", "nació", "reinó", "ganó", "estrenó", "produjo", "adoptará",
    "patentó", "celebró", "entró", "volaron", "chocaron", "descubierto",
    "elegido", "fundada", "desarrollado", "inventado", "lanzado",
    "ocurrió", "celebrarán",
})


def spanish_pack() -> LanguagePack:
    return validate_pack(LanguagePack(
        code="es",
        name="Spanish",
        when_word="cuándo",
        wh_words=("quién", "quiénes", "qué", "cuál", "cuáles", "dónde",
                  "cuándo", "cuánto", "cuántos", "cuántas", "cómo"),
        signals=SIGNALS,
        te_rules=TE_RULES,
        aux_words=("fue", "fueron", "era", "eran", "fuera", "fueran", "es",
                   "son", "está", "están", "ha", "han", "había", "habían"),
        clitics=("se", "me", "le", "les", "nos", "os"),
        verb_table=dict(VERB_TABLE),
        verb_lemmas=VERB_LEMMAS,
        verb_suffix_rules=(("iera", "ió", False), ("ieran", "ieron", False),
                           ("ara", "ó", False), ("aran", "aron", False),
                           ("ase", "ó", False)),
        tensed_suffixes=("ó", "ió", "aron", "ieron", "ara", "iera", "aba",
                         "aban", "ía", "ían"),
        gerund_suffixes=(),
        clause_templates=CLAUSE_TEMPLATES,
        stopwords=frozenset({
            "el", "la", "los", "las", "un", "una", "unos", "unas", "de",
            "del", "en", "a", "al", "y", "o", "u", "con", "por", "para",
            "que", "como",
        }),
        fillers=frozenset({
            "cuándo", "ocurrió", "ocurrir", "pasó", "sucedió",
        }),
        equivalences=(),
        determiners=frozenset({"el", "la", "los", "las", "un", "una",
                               "unos", "unas", "lo"}),
        trim_words=frozenset({"justo", "justamente", "inmediatamente"}),
        months=dict(MONTHS),
        number_words=dict(NUMBER_WORDS),
        ordinal_words=dict(ORDINAL_WORDS),
        decade_words={},
        unit_words=dict(UNIT_WORDS),
    ))
