"""Command-line front end.

Human output is 1-based and French-labeled; ``--format machine`` emits
the canonical text form of the result (rhythm, pitch-class or
permutation text, re-readable by the corresponding parser) or JSON for
structured reports.  Exit codes: 0 success, 2 parse error, 3 domain
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import catalog as cat
from . import perm as pm
from . import rhythm as rh
from . import z12
from .errors import DomainError, ParseError

MACHINE = "machine"


def _format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("human", MACHINE),
        default="human",
        help="human (default) or machine-readable output",
    )


def _unit_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--unit", default="", help="unit label for rhythms given without @unit=")


def _rhythm_arg(args, attr: str = "rhythm_text") -> rh.Rhythm:
    r = rh.parse_rhythm(getattr(args, attr))
    unit = getattr(args, "unit", "")
    if unit and not r.unit:
        r = rh.Rhythm(r.durations, unit)
    return r


def _print_rhythm(r: rh.Rhythm, args, label: str) -> None:
    if args.format == MACHINE:
        print(rh.format_rhythm(r))
    else:
        print(f"{label}: {rh.format_rhythm(r)}")


def _oui(flag: bool) -> str:
    return "oui" if flag else "non"


# --- rhythm ----------------------------------------------------------------


def _cmd_rhythm_analyze(args) -> int:
    r = _rhythm_arg(args)
    report = cat.analyze_rhythm(r)
    if args.format == MACHINE:
        print(json.dumps(cat.report_to_dict(report), ensure_ascii=False))
    else:
        print(cat.render_report(report, rhythm=r))
    return 0


def _cmd_rhythm_retrograde(args) -> int:
    _print_rhythm(rh.retrograde(_rhythm_arg(args)), args, "rétrograde")
    return 0


def _cmd_rhythm_augment(args) -> int:
    ratio = rh.as_fraction(args.ratio)
    out = rh.augment(_rhythm_arg(args), ratio)
    if args.format == MACHINE:
        print(rh.format_rhythm(out))
    else:
        kind = rh.augmentation_kind(ratio)
        label = "identité" if kind == "identity" else kind
        print(f"{label} (rapport {ratio}): {rh.format_rhythm(out)}")
    return 0


def _cmd_rhythm_amplify(args) -> int:
    core = _rhythm_arg(args)
    wing = rh.parse_rhythm(args.wing)
    _print_rhythm(rh.symmetric_amplification(core, wing), args, "amplification symétrique")
    return 0


def _cmd_rhythm_eliminate(args) -> int:
    out = rh.eliminate_extremes(_rhythm_arg(args), args.count)
    _print_rhythm(out, args, f"extrêmes éliminés (k={args.count})")
    return 0


def _cmd_rhythm_central(args) -> int:
    out = rh.scale_central(_rhythm_arg(args), rh.as_fraction(args.ratio))
    _print_rhythm(out, args, "valeur centrale modifiée")
    return 0


def _parse_voice(text: str) -> tuple[str, str]:
    delay, sep, ratio = text.partition(":")
    if not sep or not delay or not ratio:
        raise ParseError(f"voice must be DELAY:RATIO, got {text!r}")
    return delay, ratio


def _cmd_rhythm_canon(args) -> int:
    subject = _rhythm_arg(args)
    voices = [_parse_voice(v) for v in args.voice]
    sched = rh.build_canon(subject, voices)
    if args.format == MACHINE:
        payload = {
            "subject": rh.format_rhythm(subject),
            "voices": [
                {
                    "delay": str(v.delay),
                    "ratio": str(v.ratio),
                    "onsets": [str(t) for t in v.onsets],
                    "end": str(v.end),
                }
                for v in sched.voices
            ],
            "events": [[str(t), i + 1, str(d)] for t, i, d in sched.events],
        }
        print(json.dumps(payload, ensure_ascii=False))
        return 0
    for i, v in enumerate(sched.voices, start=1):
        onsets = " ".join(str(t) for t in v.onsets)
        print(f"voix {i}: départ {v.delay}, rapport {v.ratio}, attaques {onsets}, fin {v.end}")
    merged = "  ".join(f"{t} (voix {i + 1})" for t, i, _ in sched.events)
    print(f"événements: {merged}")
    return 0


# --- pcset -----------------------------------------------------------------


def _cmd_pcset_classify(args) -> int:
    s = z12.parse_pcset(args.pcset_text)
    mode = z12.classify_mode(s)
    if args.format == MACHINE:
        if mode is None:
            print("null")
        else:
            print(
                json.dumps(
                    {"mode": mode.number, "offset": mode.offset, "period": mode.period}
                )
            )
        return 0
    if mode is None:
        if not z12.is_degenerate(s) and z12.detect_truncated(s):
            print("aucun mode catalogué (mode tronqué)")
        else:
            print("aucun mode catalogué")
    else:
        print(f"Mode {mode.number}, transposition {mode.offset + 1} (sur {mode.period})")
    return 0


def _cmd_pcset_period(args) -> int:
    s = z12.parse_pcset(args.pcset_text)
    period = z12.minimal_period(s)
    if args.format == MACHINE:
        print(period)
        return 0
    line = f"période minimale: {period} — {period} transpositions distinctes"
    line += f" — transpositions limitées: {_oui(period < 12)}"
    if z12.is_degenerate(s):
        line += " — ensemble dégénéré"
    print(line)
    return 0


def _cmd_pcset_enumerate(args) -> int:
    sets = z12.enumerate_limited()
    if args.format == MACHINE:
        for s in sets:
            print(z12.format_pcset(s))
        return 0
    print(f"{len(sets)} ensembles à transpositions limitées (dégénérés inclus)")
    for s in sets:
        text = z12.format_pcset(s) or "(ensemble vide)"
        extra = " — dégénéré" if z12.is_degenerate(s) else ""
        print(f"  {text} — période {z12.minimal_period(s) if s else 1}{extra}")
    return 0


def _cmd_pcset_truncated(args) -> int:
    s = z12.parse_pcset(args.pcset_text)
    truncated = z12.detect_truncated(s)
    if args.format == MACHINE:
        print(json.dumps(truncated))
    else:
        print(f"mode tronqué: {_oui(truncated)}")
    return 0


# --- perm ------------------------------------------------------------------


def _perm_arg(args) -> pm.Perm:
    if args.chronochromie and args.perm_text:
        raise ParseError("give either a permutation or --chronochromie, not both")
    if args.chronochromie:
        return pm.chronochromie()
    if args.perm_text:
        return pm.parse_perm(args.perm_text)
    raise ParseError("a permutation (1-based images) or --chronochromie is required")


def _cmd_perm_order(args) -> int:
    p = _perm_arg(args)
    if args.format == MACHINE:
        print(p.order())
    else:
        print(f"ordre = {p.order()}")
    return 0


def _cmd_perm_cycles(args) -> int:
    p = _perm_arg(args)
    cycles = p.cycles()
    if args.format == MACHINE:
        payload = {
            "cycles": [[i + 1 for i in c] for c in cycles],
            "order": p.order(),
        }
        print(json.dumps(payload))
        return 0
    rendered = "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)
    print(f"cycles: {rendered}")
    print(f"ordre = {p.order()}")
    return 0


def _cmd_perm_fan(args) -> int:
    p = pm.fan(args.size, direction=args.direction)
    if args.format == MACHINE:
        print(pm.format_perm(p))
        return 0
    side = "gauche" if args.direction == "left" else "droite"
    print(f"éventail sur {args.size} objets (du centre vers les extrêmes, départ à {side})")
    print(f"permutation: {pm.format_perm(p)}")
    table = pm.orbit_table(p, tuple(range(1, args.size + 1)))
    print(f"suites itérées depuis {' '.join(str(i) for i in table.base)}:")
    for i, row in enumerate(table.rows, start=1):
        print(f"  {i}: {' '.join(str(x) for x in row)}")
    print(
        f"ordre = {table.order} "
        f"(la liste compte {table.order + 1} suites quand on répète la suite initiale à la fin)"
    )
    return 0


def _cmd_perm_orbit(args) -> int:
    p = _perm_arg(args)
    if args.base:
        base = rh.parse_rhythm(args.base).durations
    else:
        base = pm.chromatic_durations(len(p)).durations
    table = pm.orbit_table(p, base, cap=args.cap)
    if args.format == MACHINE:
        for row in table.rows:
            print(" ".join(str(x) for x in row))
        return 0
    for i, row in enumerate(table.rows, start=1):
        print(f"{i}: {' '.join(str(x) for x in row)}")
    print(f"ordre = {table.order}")
    return 0


def _cmd_perm_count(args) -> int:
    count = pm.permutation_count(args.size)
    if args.format == MACHINE:
        print(count)
    else:
        print(f"{args.size}! = {count}")
    return 0


# --- catalog ---------------------------------------------------------------


def _catalog_entries(args) -> list[cat.TalaEntry]:
    loader = {"talas": cat.seed_talas, "quatuor": cat.seed_quatuor}[args.which]
    return loader(args.data)


def _cmd_catalog_list(args) -> int:
    if args.which == "modes":
        modes = cat.seed_modes(args.data)
        if args.format == MACHINE:
            sys.stdout.write(cat.serialize_modes(modes))
            return 0
        for m in modes:
            print(f"{m.number}. {m.name} — {m.gloss} — {z12.format_pcset(m.members)}")
        return 0
    entries = _catalog_entries(args)
    if args.format == MACHINE:
        sys.stdout.write(cat.serialize_catalog(entries))
        return 0
    for e in entries:
        label = f" — {e.name}" if e.name else ""
        gloss = f" ({e.gloss})" if e.gloss else ""
        print(f"{e.id}{label}{gloss}: {rh.format_rhythm(e.rhythm)}")
    return 0


def _select_entries(args) -> list[cat.TalaEntry]:
    entries = _catalog_entries(args)
    if args.id is not None:
        entries = [e for e in entries if e.id == args.id]
        if not entries:
            raise DomainError(f"no entry with id {args.id}")
    return entries


def _cmd_catalog_analyze(args) -> int:
    entries = _select_entries(args)
    reports = [cat.analyze_entry(e) for e in entries]
    if args.format == MACHINE:
        print(cat.reports_to_json(reports))
        return 0
    blocks = [
        cat.render_report(report, rhythm=entry.rhythm)
        for entry, report in zip(entries, reports)
    ]
    print("\n\n".join(blocks))
    return 0


def _cmd_catalog_filter(args) -> int:
    entries = cat.filter_catalog(_catalog_entries(args), args.predicate)
    if args.format == MACHINE:
        sys.stdout.write(cat.serialize_catalog(entries))
        return 0
    for e in entries:
        print(f"{e.id}: {rh.format_rhythm(e.rhythm)}")
    return 0


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="messiaen",
        description="Non-retrogradable rhythms, modes of limited transposition, symmetric permutations.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    # rhythm
    rhythm_p = verbs.add_parser("rhythm", help="duration-sequence operations")
    actions = rhythm_p.add_subparsers(dest="action", required=True)

    def rhythm_action(name: str, func, help_: str, positional: bool = True):
        sub = actions.add_parser(name, help=help_)
        _format_flag(sub)
        _unit_flag(sub)
        if positional:
            sub.add_argument("rhythm_text", metavar="RHYTHM", help="durations, e.g. '2 1 2' or '1 1 3/2'")
        sub.set_defaults(func=func)
        return sub

    rhythm_action("analyze", _cmd_rhythm_analyze, "palindrome, total, primality, chains")
    rhythm_action("retrograde", _cmd_rhythm_retrograde, "read the durations backwards")
    aug = rhythm_action("augment", _cmd_rhythm_augment, "multiply all durations by a ratio")
    aug.add_argument("--ratio", required=True, help="positive rational, e.g. 2 or 3/2")
    amp = rhythm_action("amplify", _cmd_rhythm_amplify, "wing + core + retrograde of wing")
    amp.add_argument("--wing", required=True, metavar="RHYTHM", help="wing durations")
    eli = rhythm_action("eliminate", _cmd_rhythm_eliminate, "strip k durations from each end")
    eli.add_argument("--count", type=int, required=True, metavar="K")
    cen = rhythm_action("central", _cmd_rhythm_central, "scale the middle duration")
    cen.add_argument("--ratio", required=True, help="positive rational")
    can = rhythm_action("canon", _cmd_rhythm_canon, "onset schedule for delayed/scaled voices")
    can.add_argument(
        "--voice",
        action="append",
        default=[],
        metavar="DELAY:RATIO",
        help="one voice, e.g. 0:1 or 1:3/2 (repeatable)",
    )

    # pcset
    pcset_p = verbs.add_parser("pcset", help="pitch-class set operations")
    pactions = pcset_p.add_subparsers(dest="action", required=True)

    def pcset_action(name: str, func, help_: str, positional: bool = True):
        sub = pactions.add_parser(name, help=help_)
        _format_flag(sub)
        if positional:
            sub.add_argument("pcset_text", metavar="PCSET", help="e.g. '0 1 3 4' or 'C C# Eb E'")
        sub.set_defaults(func=func)
        return sub

    pcset_action("classify", _cmd_pcset_classify, "identify a catalogued mode and transposition")
    pcset_action("period", _cmd_pcset_period, "minimal translation period")
    pcset_action("enumerate", _cmd_pcset_enumerate, "all limited-transposition subsets", positional=False)
    pcset_action("truncated", _cmd_pcset_truncated, "limited transposition but not a catalogued mode")

    # perm
    perm_p = verbs.add_parser("perm", help="permutation operations")
    xactions = perm_p.add_subparsers(dest="action", required=True)

    def perm_action(name: str, func, help_: str, takes_perm: bool = True):
        sub = xactions.add_parser(name, help=help_)
        _format_flag(sub)
        if takes_perm:
            sub.add_argument("perm_text", nargs="?", metavar="PERM", help="1-based images, e.g. '2 1 3'")
            sub.add_argument("--chronochromie", action="store_true", help="use the 32-duration interversion")
        sub.set_defaults(func=func)
        return sub

    perm_action("order", _cmd_perm_order, "smallest power returning the identity")
    perm_action("cycles", _cmd_perm_cycles, "disjoint cycle decomposition")
    fan_sub = perm_action("fan", _cmd_perm_fan, "center-outward reading of n objects", takes_perm=False)
    fan_sub.add_argument("size", type=int, metavar="N")
    fan_sub.add_argument("--direction", choices=("left", "right"), default="left")
    orbit = perm_action("orbit", _cmd_perm_orbit, "iterate on a duration scale until it returns")
    orbit.add_argument("--base", metavar="RHYTHM", help="base sequence (default: chromatic durations 1..n)")
    orbit.add_argument("--cap", type=int, default=pm.DEFAULT_ORBIT_CAP, help="iteration hard cap")
    count = perm_action("count", _cmd_perm_count, "number of permutations of n objects", takes_perm=False)
    count.add_argument("size", type=int, metavar="N")

    # catalog
    catalog_p = verbs.add_parser("catalog", help="seed-data catalogs and reports")
    cactions = catalog_p.add_subparsers(dest="action", required=True)

    def catalog_action(name: str, func, help_: str, which_choices):
        sub = cactions.add_parser(name, help=help_)
        _format_flag(sub)
        sub.add_argument("--which", choices=which_choices, default="talas", help="catalog to use")
        sub.add_argument("--data", metavar="DIR", help="directory overriding the shipped data files")
        sub.set_defaults(func=func)
        return sub

    catalog_action("list", _cmd_catalog_list, "list entries", ("talas", "quatuor", "modes"))
    ana = catalog_action("analyze", _cmd_catalog_analyze, "per-entry analysis reports", ("talas", "quatuor"))
    ana.add_argument("--id", type=int, help="restrict to one entry id")
    fil = catalog_action("filter", _cmd_catalog_filter, "entries whose report satisfies a predicate", ("talas", "quatuor"))
    fil.add_argument("predicate", choices=sorted(cat.PREDICATES), metavar="PREDICATE",
                     help=", ".join(sorted(cat.PREDICATES)))

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"erreur de lecture: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"erreur de lecture: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"erreur: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
