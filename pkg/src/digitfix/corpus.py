"""Embedded regression corpus: every ground-truth list the package promises.

The corpus ships as ``data/corpus.json`` so checks run offline.  Each entry
re-runs one search or verification and diffs the result against the frozen
expectation.  Entries flagged ``erratum`` record published values that are
known to be wrong; for those the check passes exactly when the verification
FAILS, guarding against the wrong values ever creeping back in as truth.

Entry schema (one JSON object per entry):

``id``          unique name
``kind``        one of search | pair | piezas | vitalis
``family``      search kind only: hardy | armstrong | wells | wells-reverse |
                dudeney | powersum | reversal
``base, k, fn, engine, cap, max_order, digits, include_zero, zero_pow_zero``
                search parameters (defaults: base 10, k 1, engine per family)
``expected``    sorted values; reversal: [value, multiplier] pairs; pair:
                boolean; piezas: {"i", "t", "x", "y"} with decimal strings;
                vitalis: {"l_max"}
``erratum``     entry must FAIL its verification (default false)
``note``        provenance: literature reference or the oracle that froze it
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import ConfigurationError
from .families import decimal_str, piezas_generate, verify_concat_square, vitalis_generate
from .funcatalog import parse_spec
from .search import (
    SearchConfig,
    search_armstrong,
    search_dudeney,
    search_hardy,
    search_powersum,
    search_reversal,
    search_wells,
    search_wells_reverse,
)

__all__ = ["CorpusEntry", "CorpusReport", "EntryResult", "corpus_check", "load_corpus"]


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    kind: str
    expected: object
    family: str | None = None
    base: int = 10
    k: int = 1
    fn: str | None = None
    engine: str | None = None
    cap: int | None = None
    max_order: int | None = None
    digits: int | None = None
    include_zero: bool = False
    zero_pow_zero: int = 1
    erratum: bool = False
    note: str = ""


@dataclass(frozen=True)
class EntryResult:
    entry: CorpusEntry
    ok: bool
    actual: object


@dataclass(frozen=True)
class CorpusReport:
    results: tuple[EntryResult, ...] = field(default_factory=tuple)

    @property
    def mismatches(self) -> tuple[EntryResult, ...]:
        return tuple(r for r in self.results if not r.ok)


def load_corpus() -> list[CorpusEntry]:
    raw = resources.files("digitfix").joinpath("data/corpus.json").read_text()
    entries = []
    seen = set()
    for obj in json.loads(raw):
        entry = CorpusEntry(**obj)
        if entry.id in seen:
            raise ConfigurationError(f"duplicate corpus entry id {entry.id!r}")
        seen.add(entry.id)
        _validate(entry)
        entries.append(entry)
    return entries


def _validate(entry: CorpusEntry) -> None:
    if entry.kind == "search":
        if entry.family != "reversal":
            if entry.fn is None and entry.family != "armstrong":
                raise ConfigurationError(f"corpus entry {entry.id!r}: missing function spec")
            if entry.fn is not None:
                try:
                    parse_spec(entry.fn)
                except ConfigurationError as exc:
                    raise ConfigurationError(f"corpus entry {entry.id!r}: {exc}") from exc
        values = entry.expected
        if entry.family == "reversal":
            values = [v for v, _ in entry.expected]
        if list(values) != sorted(set(values)):
            raise ConfigurationError(
                f"corpus entry {entry.id!r}: expected values must be strictly increasing"
            )


def _run_search(entry: CorpusEntry) -> object:
    family = entry.family
    spec = parse_spec(entry.fn).with_zero_self_power(entry.zero_pow_zero) if entry.fn else None
    if family == "hardy":
        cfg = SearchConfig(
            spec=spec,
            base=entry.base,
            width=entry.k,
            engine=entry.engine or "scan",
            cap=entry.cap,
            include_zero=entry.include_zero,
        )
        return [h.value for h in search_hardy(cfg)]
    if family == "armstrong":
        return [h.value for h in search_armstrong(entry.base, entry.max_order)]
    if family == "wells":
        return [h.value for h in search_wells(spec, entry.base, entry.cap, entry.include_zero)]
    if family == "wells-reverse":
        return [
            h.value
            for h in search_wells_reverse(spec, entry.base, entry.cap, entry.include_zero)
        ]
    if family == "dudeney":
        return [
            h.value
            for h in search_dudeney(
                spec, entry.base, entry.cap, entry.engine or "scan", entry.include_zero
            )
        ]
    if family == "powersum":
        return [
            h.value
            for h in search_powersum(
                spec.exponent,
                entry.base,
                engine=entry.engine or "preimage",
                cap=entry.cap,
                include_zero=entry.include_zero,
            )
        ]
    if family == "reversal":
        return [[h.value, h.multiplier] for h in search_reversal(entry.base, entry.digits)]
    raise ConfigurationError(f"corpus entry {entry.id!r}: unknown family {family!r}")


def _run_entry(entry: CorpusEntry) -> object:
    if entry.kind == "search":
        return _run_search(entry)
    if entry.kind == "pair":
        x, y, length = entry.expected["x"], entry.expected["y"], entry.expected["block_length"]
        return verify_concat_square(x, y, length) == entry.expected["verifies"]
    if entry.kind == "piezas":
        pair = piezas_generate(entry.expected["i"], entry.expected["t"])
        return decimal_str(pair.x) == entry.expected["x"] and decimal_str(pair.y) == entry.expected["y"]
    if entry.kind == "vitalis":
        try:
            for l in range(entry.expected["l_max"] + 1):
                vitalis_generate(l)
        except RuntimeError:
            return False
        return True
    raise ConfigurationError(f"corpus entry {entry.id!r}: unknown kind {entry.kind!r}")


def check_entry(entry: CorpusEntry) -> EntryResult:
    actual = _run_entry(entry)
    if entry.kind == "search":
        matches = list(actual) == list(entry.expected)
    else:
        matches = bool(actual)
    # erratum entries must fail their verification
    ok = matches != entry.erratum
    return EntryResult(entry=entry, ok=ok, actual=actual)


def corpus_check(entries: list[CorpusEntry] | None = None) -> CorpusReport:
    """Re-run every corpus entry and diff against the frozen expectations."""
    if entries is None:
        entries = load_corpus()
    return CorpusReport(results=tuple(check_entry(e) for e in entries))
