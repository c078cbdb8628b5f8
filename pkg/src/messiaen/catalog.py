"""Seed catalogs of quoted musical data and per-entry analysis reports.

Three catalogs ship with the package under ``data/``: the deçî-tâlas
quoted from Sharngadeva's 120-rhythm table (``talas.cat``), the eight
non-retrogradable measures cited from the Quatuor pour la fin du Temps
(``quatuor.cat``), and the seven modes of limited transposition
(``modes.cat``).

Catalog files are line-oriented UTF-8, one entry per line:

    id|name|gloss|durations[|source note]

with ``#`` comment lines and blank lines ignored.  The durations cell
uses the rhythm text format (so it may carry ``@unit=<label>``);
``modes.cat`` uses the pitch-class text format in that cell instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from . import z12
from .errors import BadPredicate, DuplicateId, NonIntegerTotal, ParseError, TooShort
from .rhythm import (
    AugmentationChain,
    InterleaveProfile,
    Rhythm,
    SequenceShape,
    detect_augmentation_chain,
    format_rhythm,
    interleave_profile,
    is_non_retrogradable,
    is_prime_total,
    parse_rhythm,
    total_duration,
)

SEED_FILES = ("talas.cat", "quatuor.cat", "modes.cat")


@dataclass(frozen=True)
class TalaEntry:
    """One catalog record: a numbered rhythm with its name and gloss."""

    id: int
    name: str
    gloss: str
    rhythm: Rhythm
    source_note: str = ""


@dataclass(frozen=True)
class ModeEntry:
    """One catalogued mode: number, name, gloss, members."""

    number: int
    name: str
    gloss: str
    members: z12.PcSet


def _split_line(line: str, lineno: int) -> tuple[int, str, str, str, str]:
    fields = line.split("|")
    if len(fields) not in (4, 5):
        raise ParseError(f"expected 4 or 5 |-separated fields, got {len(fields)}", lineno)
    raw_id, name, gloss, payload = fields[:4]
    note = fields[4].strip() if len(fields) == 5 else ""
    if not raw_id.strip().isdigit():
        raise ParseError(f"id must be a positive integer, got {raw_id.strip()!r}", lineno)
    ident = int(raw_id)
    if ident < 1:
        raise ParseError(f"id must be positive, got {ident}", lineno)
    return ident, name.strip(), gloss.strip(), payload.strip(), note


def _content_lines(source: Iterable[str]) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def load_catalog(source: Iterable[str]) -> list[TalaEntry]:
    """Parse rhythm catalog lines in file order, rejecting duplicate ids.

    ``source`` is any iterable of lines (an open text file works).
    """
    entries: list[TalaEntry] = []
    seen: set[int] = set()
    for lineno, line in _content_lines(source):
        ident, name, gloss, payload, note = _split_line(line, lineno)
        if ident in seen:
            raise DuplicateId(f"duplicate id {ident}", lineno)
        seen.add(ident)
        try:
            rhythm = parse_rhythm(payload)
        except ParseError as exc:
            raise ParseError(f"bad durations: {exc}", lineno) from exc
        entries.append(TalaEntry(ident, name, gloss, rhythm, note))
    return entries


def load_modes(source: Iterable[str]) -> list[ModeEntry]:
    """Parse mode catalog lines; the payload cell holds pitch classes."""
    entries: list[ModeEntry] = []
    seen: set[int] = set()
    for lineno, line in _content_lines(source):
        number, name, gloss, payload, _ = _split_line(line, lineno)
        if number in seen:
            raise DuplicateId(f"duplicate mode number {number}", lineno)
        seen.add(number)
        try:
            members = z12.parse_pcset(payload)
        except ParseError as exc:
            raise ParseError(f"bad pitch classes: {exc}", lineno) from exc
        entries.append(ModeEntry(number, name, gloss, members))
    return entries


def serialize_catalog(entries: Iterable[TalaEntry]) -> str:
    """Canonical catalog text, one line per entry, loadable by :func:`load_catalog`."""
    lines = []
    for e in entries:
        line = f"{e.id}|{e.name}|{e.gloss}|{format_rhythm(e.rhythm)}"
        if e.source_note:
            line += f"|{e.source_note}"
        lines.append(line)
    return "\n".join(lines) + "\n" if lines else ""


def serialize_modes(entries: Iterable[ModeEntry]) -> str:
    """Canonical mode catalog text, loadable by :func:`load_modes`."""
    lines = [
        f"{e.number}|{e.name}|{e.gloss}|{z12.format_pcset(e.members)}" for e in entries
    ]
    return "\n".join(lines) + "\n" if lines else ""


def _read_seed(name: str, data_dir: Optional[str] = None) -> list[str]:
    if data_dir is not None:
        return (Path(data_dir) / name).read_text(encoding="utf-8").splitlines()
    text = resources.files("messiaen").joinpath("data", name).read_text(encoding="utf-8")
    return text.splitlines()


def seed_talas(data_dir: Optional[str] = None) -> list[TalaEntry]:
    """The shipped deçî-tâla entries (or those from an override directory)."""
    return load_catalog(_read_seed("talas.cat", data_dir))


def seed_quatuor(data_dir: Optional[str] = None) -> list[TalaEntry]:
    """The shipped Quatuor measures."""
    return load_catalog(_read_seed("quatuor.cat", data_dir))


def seed_modes(data_dir: Optional[str] = None) -> list[ModeEntry]:
    """The shipped seven-mode table."""
    return load_modes(_read_seed("modes.cat", data_dir))


@dataclass(frozen=True)
class AnalysisReport:
    """Analysis of one rhythm, every field produced by the rhythm operations.

    ``prime_total`` is None when the total is not a whole number of
    units; ``interleave`` is None for single-duration rhythms.
    """

    entry_id: Optional[int]
    non_retrogradable: bool
    total: Fraction
    prime_total: Optional[bool]
    augmentation_chain: Optional[AugmentationChain]
    interleave: Optional[InterleaveProfile]


def analyze_rhythm(r: Rhythm, entry_id: Optional[int] = None) -> AnalysisReport:
    """Run the full battery of rhythm analyses on one duration sequence."""
    try:
        prime = is_prime_total(r)
    except NonIntegerTotal:
        prime = None
    try:
        interleave = interleave_profile(r)
    except TooShort:
        interleave = None
    return AnalysisReport(
        entry_id=entry_id,
        non_retrogradable=is_non_retrogradable(r),
        total=total_duration(r),
        prime_total=prime,
        augmentation_chain=detect_augmentation_chain(r),
        interleave=interleave,
    )


def analyze_entry(e: TalaEntry) -> AnalysisReport:
    """Report for one catalog entry."""
    return analyze_rhythm(e.rhythm, entry_id=e.id)


def _pred_nonretro(report: AnalysisReport) -> bool:
    return report.non_retrogradable


def _pred_prime(report: AnalysisReport) -> bool:
    return report.prime_total is True


def _pred_augchain(report: AnalysisReport) -> bool:
    return report.augmentation_chain is not None


def _pred_interleave(report: AnalysisReport) -> bool:
    # The interlocking pattern: one parity class constant, the other
    # rising then falling.
    p = report.interleave
    if p is None:
        return False
    return (p.even.constant and p.odd.unimodal) or (p.odd.constant and p.even.unimodal)


PREDICATES = {
    "nonretro": _pred_nonretro,
    "prime": _pred_prime,
    "augchain": _pred_augchain,
    "interleave": _pred_interleave,
}


def filter_catalog(entries: Iterable[TalaEntry], predicate: str) -> list[TalaEntry]:
    """Stable-order subset of entries whose analysis satisfies the predicate.

    >>> [e.id for e in filter_catalog(seed_talas(), "augchain")]
    [73, 115]
    """
    try:
        pred = PREDICATES[predicate]
    except KeyError:
        raise BadPredicate(
            f"unknown predicate {predicate!r}; choose from {', '.join(sorted(PREDICATES))}"
        ) from None
    return [e for e in entries if pred(analyze_entry(e))]


def _shape_dict(shape: SequenceShape) -> dict:
    return {
        "values": [str(v) for v in shape.values],
        "constant": shape.constant,
        "increasing": shape.increasing,
        "decreasing": shape.decreasing,
        "unimodal": shape.unimodal,
    }


def report_to_dict(report: AnalysisReport) -> dict:
    """Machine form of a report with stable English keys; rationals as n/d text."""
    out: dict = {}
    if report.entry_id is not None:
        out["id"] = report.entry_id
    out["non_retrogradable"] = report.non_retrogradable
    out["total"] = str(report.total)
    out["prime_total"] = report.prime_total
    chain = report.augmentation_chain
    out["augmentation_chain"] = (
        None
        if chain is None
        else {
            "prefix": format_rhythm(chain.prefix, with_unit=False),
            "ratios": [str(q) for q in chain.ratios],
        }
    )
    out["interleave"] = (
        None
        if report.interleave is None
        else {
            "odd": _shape_dict(report.interleave.odd),
            "even": _shape_dict(report.interleave.even),
        }
    )
    return out


def _oui(flag: bool) -> str:
    return "oui" if flag else "non"


def _shape_label(shape: SequenceShape) -> str:
    if shape.constant:
        return "constante"
    if shape.unimodal:
        return "croissante puis décroissante"
    if shape.increasing:
        return "croissante"
    if shape.decreasing:
        return "décroissante"
    return "irrégulière"


def render_report(report: AnalysisReport, rhythm: Optional[Rhythm] = None) -> str:
    """Human-readable key/value block for one report (French labels)."""
    lines = []
    if report.entry_id is not None:
        lines.append(f"id: {report.entry_id}")
    if rhythm is not None:
        lines.append(f"durées: {format_rhythm(rhythm)}")
    lines.append(f"non rétrogradable: {_oui(report.non_retrogradable)}")
    lines.append(f"durée totale: {report.total}")
    if report.prime_total is None:
        lines.append("total premier: — (total non entier)")
    else:
        lines.append(f"total premier: {_oui(report.prime_total)}")
    chain = report.augmentation_chain
    if chain is None:
        lines.append("chaîne d'augmentation: aucune")
    else:
        ratios = " ".join(str(q) for q in chain.ratios)
        lines.append(
            "chaîne d'augmentation: préfixe "
            f"{format_rhythm(chain.prefix, with_unit=False)}, rapports {ratios}"
        )
    if report.interleave is not None:
        odd, even = report.interleave.odd, report.interleave.even
        odd_vals = " ".join(str(v) for v in odd.values)
        even_vals = " ".join(str(v) for v in even.values)
        lines.append(f"rangs impairs: {odd_vals} ({_shape_label(odd)})")
        lines.append(f"rangs pairs: {even_vals} ({_shape_label(even)})")
    return "\n".join(lines)


def reports_to_json(reports: Iterable[AnalysisReport]) -> str:
    """JSON array of report dicts."""
    return json.dumps([report_to_dict(r) for r in reports], ensure_ascii=False, indent=2)
