"""Command line: invariant conversions, pair reports, geography scans.

Every command writes its payload to stdout and errors to stderr, exits 0 on
success and nonzero otherwise, and supports `--format json` (and `csv` for
`scan`) next to the default text rendering.  Output is deterministic: no
timestamps, stable key order, exact integers and rationals only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .errors import FourfoldError, NonIntegralChiError, UsageError
from .hirzebruch import (
    DivisorClass,
    HirzebruchSurface,
    branch_ampleness_discrepancy,
    canonical_class,
    horikawa,
    horikawa_branch_class,
    is_ample,
)
from .obstruction import ObstructionCertificate, SWManifold, einstein_obstructed
from .pairs import (
    DEFAULT_PERSSON_PRESET,
    PERSSON_REGION_ENV,
    EinsteinPair,
    GeographyPredicateSet,
    general_search,
    theorem_pair,
)
from .topology import (
    CharNumbers,
    ChernNumbers,
    Parity,
    TopologicalType,
    char_numbers,
    char_to_chern,
    chern_to_char,
    freedman_homeomorphic,
    hitchin_thorpe,
    hitchin_thorpe_equality,
    type_from_char,
)

CSV_COLUMNS = ("chi", "c1sq_z", "c1sq_y", "k", "e", "sigma", "ht_margin", "obstruction_margin")


@dataclass
class ReportEnvelope:
    """What a command produced: the result payload plus the caveats that
    must ride along in machine output."""

    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    caveats: list[str] = field(default_factory=list)

    def payload(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "caveats": list(self.caveats),
        }

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=2, sort_keys=True)


def _rat(x: Fraction | int) -> int | str:
    """Exact rendering: integers stay integers, true rationals become 'p/q'."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    return x


def _char_payload(c: CharNumbers) -> dict[str, int]:
    return {"e": c.e, "sigma": c.sigma}


def _chern_payload(c: ChernNumbers) -> dict[str, int]:
    return {"c1sq": c.c1sq, "chi": c.chi}


def _topo_payload(t: TopologicalType) -> dict[str, Any]:
    c = char_numbers(t)
    return {
        "b2_plus": t.b2_plus,
        "b2_minus": t.b2_minus,
        "parity": t.parity.value,
        "e": c.e,
        "sigma": c.sigma,
    }


def _ht_payload(c: CharNumbers) -> dict[str, Any]:
    return {
        "holds": hitchin_thorpe(c),
        "strict": hitchin_thorpe(c, strict=True),
        "equality": hitchin_thorpe_equality(c),
        "margin": 2 * c.e - 3 * abs(c.sigma),
    }


def _certificate_payload(cert: ObstructionCertificate) -> dict[str, Any]:
    return {
        "y_char": _char_payload(cert.y_char),
        "k": cert.k,
        "x_char": _char_payload(cert.x_char),
        "lhs_bound": _rat(cert.lhs_bound),
        "einstein_bound": _rat(cert.einstein_bound),
        "conclusion": cert.conclusion,
        "threshold_margin": cert.threshold_margin,
        "hitchin_thorpe_equality": cert.hitchin_thorpe_equality,
        "notes": list(cert.notes),
        "steps": [
            {
                "label": s.label,
                "statement": s.statement,
                "lhs": _rat(s.lhs),
                "relation": s.relation,
                "rhs": _rat(s.rhs),
                "holds": s.holds,
            }
            for s in cert.steps
        ],
    }


def _betti_from_char(c: CharNumbers) -> tuple[int, int] | None:
    b2 = c.e - 2
    if b2 < 0 or (b2 + c.sigma) % 2 != 0:
        return None
    b2_plus = (b2 + c.sigma) // 2
    b2_minus = (b2 - c.sigma) // 2
    if b2_plus < 0 or b2_minus < 0:
        return None
    return b2_plus, b2_minus


# ---------------------------------------------------------------- commands

_SYSTEM_CHAR = frozenset({"e", "sigma"})
_SYSTEM_CHERN = frozenset({"c1sq", "chi"})
_SYSTEM_BETTI = frozenset({"b2plus", "b2minus", "parity"})


def cmd_invariants(given: dict[str, Any]) -> ReportEnvelope:
    supplied = frozenset(k for k, v in given.items() if v is not None)
    caveats: list[str] = []
    parity_value: str | None = None

    if supplied == _SYSTEM_CHAR:
        char = CharNumbers(given["e"], given["sigma"])
        chern = char_to_chern(char)  # may raise NonIntegralChiError
    elif supplied == _SYSTEM_CHERN:
        chern = ChernNumbers(given["c1sq"], given["chi"])
        char = chern_to_char(chern)
    elif supplied == _SYSTEM_BETTI:
        t = TopologicalType(given["b2plus"], given["b2minus"], Parity(given["parity"]))
        parity_value = t.parity.value
        char = char_numbers(t)
        try:
            chern = char_to_chern(char)
        except NonIntegralChiError:
            chern = None
            caveats.append(
                "no complex-surface coordinates: e + sigma is not divisible by 4"
            )
    else:
        raise UsageError(
            "supply exactly one complete coordinate system: --e/--sigma, "
            "--c1sq/--chi, or --b2plus/--b2minus/--parity"
        )

    betti = _betti_from_char(char)
    if betti is None:
        caveats.append(
            "no simply connected closed type realizes these numbers as (b2+, b2-)"
        )
    elif parity_value is None:
        caveats.append("parity is not determined by (e, sigma); both may be possible")

    result: dict[str, Any] = {
        "char": _char_payload(char),
        "chern": _chern_payload(chern) if chern is not None else None,
        "betti": {"b2_plus": betti[0], "b2_minus": betti[1]} if betti else None,
        "parity": parity_value,
        "hitchin_thorpe": _ht_payload(char),
    }
    inputs = {k: v for k, v in given.items() if v is not None}
    return ReportEnvelope("invariants", inputs, result, caveats)


def _pair_envelope(pair: EinsteinPair, inputs: dict[str, Any], preset: str) -> ReportEnvelope:
    y_char = pair.certificate.y_char
    result = {
        "z": {
            "chern": _chern_payload(pair.z.chern),
            "spin": pair.z.spin,
            "ample_canonical": pair.z.ample_canonical,
            "simply_connected": pair.z.simply_connected,
            "construction": pair.z.construction,
        },
        "y": {
            "c1sq": pair.y_chern.c1sq,
            "chi": pair.y_chern.chi,
            "e": y_char.e,
            "sigma": y_char.sigma,
            "b2_plus": (y_char.e - 2 + y_char.sigma) // 2,
        },
        "k": pair.k,
        "x": _topo_payload(pair.x_topo),
        "checks": {
            "homeomorphic": pair.checks.homeomorphic,
            "strict_hitchin_thorpe": pair.checks.strict_hitchin_thorpe,
            "z_in_ample_sector": pair.checks.z_in_ample_sector,
            "y_in_persson_region": pair.checks.y_in_persson_region,
        },
        "verified": pair.verified,
        "below_very_ample_bound": pair.below_very_ample_bound,
        "margins": {
            "hitchin_thorpe": pair.ht_margin,
            "obstruction": pair.obstruction_margin,
        },
        "certificate": _certificate_payload(pair.certificate),
    }
    caveats = list(pair.provenance)
    caveats.append(f"existence-region preset: {preset}")
    return ReportEnvelope("pair", inputs, result, caveats)


def cmd_pair(i: int, i_min: int, preset: str) -> ReportEnvelope:
    predicates = GeographyPredicateSet.from_preset(preset)
    pair = theorem_pair(i, predicates=predicates, i_min=i_min)
    return _pair_envelope(pair, {"i": i, "i_min": i_min}, preset)


def cmd_horikawa(i: int) -> ReportEnvelope:
    record = horikawa(i)
    s = HirzebruchSurface(i)
    branch = horikawa_branch_class(s)
    half = DivisorClass(branch.a // 2, branch.b // 2, branch.base)
    pullback = canonical_class(s) + half
    caveats = [
        "smoothness of a branch curve in the stated class is assumed, as is simple "
        "connectivity of the cover"
    ]
    discrepancy = branch_ampleness_discrepancy(i)
    if discrepancy is not None:
        caveats.append(discrepancy)
    result = {
        "i": i,
        "surface": {
            "chern": _chern_payload(record.chern),
            "spin": record.spin,
            "ample_canonical": record.ample_canonical,
            "simply_connected": record.simply_connected,
            "construction": record.construction,
        },
        "char": _char_payload(chern_to_char(record.chern)),
        "canonical_pullback_class": {
            "s_coeff": pullback.a,
            "f_coeff": pullback.b,
            "ample": is_ample(pullback),
        },
        "branch_class": {
            "s_coeff": branch.a,
            "f_coeff": branch.b,
            "ample": is_ample(branch),
        },
        "noether_equality": record.chern.c1sq == 2 * record.chern.chi - 6,
    }
    return ReportEnvelope("horikawa", {"i": i}, result, caveats)


def cmd_obstruct(e: int, sigma: int, k: int, b2plus: int) -> ReportEnvelope:
    x_char = CharNumbers(e, sigma)
    y_char = CharNumbers(e - k, sigma + k)
    b2 = y_char.e - 2
    if b2 < 0:
        raise FourfoldError(
            f"pre-blowup Euler characteristic e - k = {y_char.e} is below 2"
        )
    if 2 * b2plus - b2 != y_char.sigma:
        raise FourfoldError(
            f"b2+ = {b2plus} is inconsistent with the pre-blowup numbers "
            f"(e, sigma) = ({y_char.e}, {y_char.sigma})"
        )
    y_topo = TopologicalType(b2plus, b2 - b2plus, Parity.ODD)
    sw = SWManifold(
        y_topo,
        has_nonzero_sw=True,
        provenance="user-supplied axiom: some Spin^c structure on the pre-blowup "
        "manifold has a non-zero Seiberg-Witten invariant",
    )
    cert = einstein_obstructed(sw, k)
    result = {
        "x_char": _char_payload(x_char),
        "y_char": _char_payload(y_char),
        "k": k,
        "b2_plus": b2plus,
        "conclusion": cert.conclusion,
        "certificate": _certificate_payload(cert),
    }
    caveats = [sw.provenance]
    return ReportEnvelope(
        "obstruct", {"e": e, "sigma": sigma, "k": k, "b2plus": b2plus}, result, caveats
    )


def _parse_type_spec(text: str) -> TopologicalType:
    items: dict[str, str] = {}
    for chunk in text.split(","):
        key, eq, value = chunk.partition("=")
        if not eq:
            raise UsageError(f"malformed type spec item {chunk!r}; expected key=value")
        items[key.strip()] = value.strip()
    keys = frozenset(items)
    char_keys = frozenset({"e", "sigma", "parity"})
    betti_keys = frozenset({"b2plus", "b2minus", "parity"})
    if keys not in (char_keys, betti_keys):
        raise UsageError(
            f"type spec {text!r} must be e=..,sigma=..,parity=odd|even or "
            "b2plus=..,b2minus=..,parity=odd|even"
        )
    try:
        parity = Parity(items["parity"])
        numbers = {k: int(v) for k, v in items.items() if k != "parity"}
    except ValueError as exc:
        raise UsageError(f"malformed type spec {text!r}: {exc}") from None
    if keys == char_keys:
        return type_from_char(CharNumbers(numbers["e"], numbers["sigma"]), parity)
    return TopologicalType(numbers["b2plus"], numbers["b2minus"], parity)


def cmd_homeo(spec_a: str, spec_b: str) -> ReportEnvelope:
    a = _parse_type_spec(spec_a)
    b = _parse_type_spec(spec_b)
    result = {
        "a": _topo_payload(a),
        "b": _topo_payload(b),
        "homeomorphic": freedman_homeomorphic(a, b),
    }
    return ReportEnvelope("homeo", {"a": spec_a, "b": spec_b}, result, [])


def cmd_scan(chi_min: int, chi_max: int, preset: str) -> ReportEnvelope:
    if not (1 <= chi_min <= chi_max):
        raise UsageError(
            f"invalid range: need 1 <= chi-min <= chi-max, got {chi_min}..{chi_max}"
        )
    predicates = GeographyPredicateSet.from_preset(preset)
    pairs = general_search(chi_min, chi_max, predicates=predicates)
    rows = []
    for p in pairs:
        c = char_numbers(p.x_topo)
        rows.append(
            {
                "chi": p.z.chern.chi,
                "c1sq_z": p.z.chern.c1sq,
                "c1sq_y": p.y_chern.c1sq,
                "k": p.k,
                "e": c.e,
                "sigma": c.sigma,
                "ht_margin": p.ht_margin,
                "obstruction_margin": p.obstruction_margin,
            }
        )
    caveats = [
        f"existence-region preset: {preset}",
        "existence of the surfaces at each lattice point is an imported geography "
        "assumption, not a construction",
    ]
    if chi_min == 1:
        caveats.append(
            "chi = 1 carries no rows: there b2+(Y) = 2*chi - 1 = 1 and the "
            "obstruction is modeled only for b2+ > 1"
        )
    result = {"columns": list(CSV_COLUMNS), "rows": rows, "count": len(rows)}
    return ReportEnvelope(
        "scan", {"chi_min": chi_min, "chi_max": chi_max}, result, caveats
    )


# --------------------------------------------------------------- rendering


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _text_invariants(env: ReportEnvelope) -> str:
    r = env.result
    lines = []
    if r["chern"] is not None:
        lines.append(f"chern: c1^2 = {r['chern']['c1sq']}, chi = {r['chern']['chi']}")
    else:
        lines.append("chern: (none)")
    lines.append(f"char:  e = {r['char']['e']}, sigma = {r['char']['sigma']}")
    if r["betti"] is not None:
        parity = r["parity"] if r["parity"] is not None else "unknown"
        lines.append(
            f"betti: b2+ = {r['betti']['b2_plus']}, b2- = {r['betti']['b2_minus']}, "
            f"parity = {parity}"
        )
    else:
        lines.append("betti: not realizable as (b2+, b2-)")
    ht = r["hitchin_thorpe"]
    e, sigma = r["char"]["e"], r["char"]["sigma"]
    verdict = "holds" if ht["holds"] else "fails"
    if ht["equality"]:
        verdict += " with equality (an Einstein metric would be flat or a K3-metric quotient)"
    lines.append(f"hitchin-thorpe: 2e = {2 * e} vs 3|sigma| = {3 * abs(sigma)} -> {verdict}")
    lines.append(f"hitchin-thorpe (strict): {'holds' if ht['strict'] else 'fails'}")
    return "\n".join(lines)


def _text_certificate(cert_payload: dict[str, Any]) -> list[str]:
    lines = []
    for s in cert_payload["steps"]:
        lines.append(
            f"  [{s['label']}] {s['lhs']} {s['relation']} {s['rhs']} "
            f"({'holds' if s['holds'] else 'fails'}): {s['statement']}"
        )
    for note in cert_payload["notes"]:
        lines.append(f"  note: {note}")
    return lines


def _obstruction_line(cert_payload: dict[str, Any], k: int) -> str:
    y = cert_payload["y_char"]
    m = 2 * y["e"] + 3 * y["sigma"]
    relation = ">" if cert_payload["conclusion"] == "obstructed" else "<="
    return (
        f"obstruction: 3k = {3 * k} {relation} {2 * m} = 2(2e(Y) + 3sigma(Y)) "
        f"-> {cert_payload['conclusion']}"
    )


def _text_pair(env: ReportEnvelope) -> str:
    r = env.result
    z, y, x = r["z"], r["y"], r["x"]
    lines = [
        f"pair i={env.inputs['i']}  verified={_yesno(r['verified'])}",
        f"Z: {z['construction']}  c1^2 = {z['chern']['c1sq']}, chi = {z['chern']['chi']}, "
        f"spin = {_yesno(z['spin'])}, ample canonical = {_yesno(z['ample_canonical'])}",
        f"Y: c1^2 = {y['c1sq']}, chi = {y['chi']}  (e = {y['e']}, sigma = {y['sigma']}, "
        f"b2+ = {y['b2_plus']})",
        f"k = {r['k']} blowups",
        f"X: e = {x['e']}, sigma = {x['sigma']}, parity = {x['parity']}",
        "checks: homeomorphic={h} strict-hitchin-thorpe={s} z-in-ample-sector={za} "
        "y-in-persson-region={yp}".format(
            h=_yesno(r["checks"]["homeomorphic"]),
            s=_yesno(r["checks"]["strict_hitchin_thorpe"]),
            za=_yesno(r["checks"]["z_in_ample_sector"]),
            yp=_yesno(r["checks"]["y_in_persson_region"]),
        ),
        f"margins: hitchin-thorpe = {r['margins']['hitchin_thorpe']}, "
        f"obstruction = {r['margins']['obstruction']}",
        _obstruction_line(r["certificate"], r["k"]),
        "certificate:",
        *_text_certificate(r["certificate"]),
    ]
    return "\n".join(lines)


def _text_horikawa(env: ReportEnvelope) -> str:
    r = env.result
    s = r["surface"]
    pull, br = r["canonical_pullback_class"], r["branch_class"]
    return "\n".join(
        [
            f"horikawa i={r['i']}: c1^2 = {s['chern']['c1sq']}, chi = {s['chern']['chi']}  "
            f"(e = {r['char']['e']}, sigma = {r['char']['sigma']})",
            f"spin = {_yesno(s['spin'])}, ample canonical = {_yesno(s['ample_canonical'])}, "
            f"simply connected = {_yesno(s['simply_connected'])}",
            f"noether line c1^2 = 2chi - 6: {'attained' if r['noether_equality'] else 'missed'}",
            f"canonical pullback class {pull['s_coeff']}S + {pull['f_coeff']}F: "
            f"ample = {_yesno(pull['ample'])}",
            f"branch class {br['s_coeff']}S + {br['f_coeff']}F: ample = {_yesno(br['ample'])}",
        ]
    )


def _text_obstruct(env: ReportEnvelope) -> str:
    r = env.result
    x, y = r["x_char"], r["y_char"]
    lines = [
        f"X: e = {x['e']}, sigma = {x['sigma']}  ({r['k']} blowups of Y)",
        f"Y: e = {y['e']}, sigma = {y['sigma']}, b2+ = {r['b2_plus']}",
        _obstruction_line(r["certificate"], r["k"]),
        "certificate:",
        *_text_certificate(r["certificate"]),
    ]
    return "\n".join(lines)


def _text_homeo(env: ReportEnvelope) -> str:
    r = env.result
    a, b = r["a"], r["b"]
    return "\n".join(
        [
            f"a: b2+ = {a['b2_plus']}, b2- = {a['b2_minus']}, parity = {a['parity']} "
            f"(e = {a['e']}, sigma = {a['sigma']})",
            f"b: b2+ = {b['b2_plus']}, b2- = {b['b2_minus']}, parity = {b['parity']} "
            f"(e = {b['e']}, sigma = {b['sigma']})",
            f"homeomorphic: {_yesno(r['homeomorphic'])}",
        ]
    )


def _text_scan(env: ReportEnvelope) -> str:
    lines = [f"# {c}" for c in env.caveats]
    for row in env.result["rows"]:
        lines.append("  ".join(f"{col}={row[col]}" for col in CSV_COLUMNS))
    lines.append(f"rows: {env.result['count']}")
    return "\n".join(lines)


_TEXT_RENDERERS = {
    "invariants": _text_invariants,
    "pair": _text_pair,
    "horikawa": _text_horikawa,
    "obstruct": _text_obstruct,
    "homeo": _text_homeo,
    "scan": _text_scan,
}


def _scan_csv(env: ReportEnvelope) -> str:
    out = io.StringIO()
    for caveat in env.caveats:
        out.write(f"# {caveat}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in env.result["rows"]:
        writer.writerow([row[col] for col in CSV_COLUMNS])
    return out.getvalue()


def _render(env: ReportEnvelope, fmt: str) -> None:
    if fmt == "json":
        print(env.to_json())
    elif fmt == "csv":
        sys.stdout.write(_scan_csv(env))
    else:
        text = _TEXT_RENDERERS[env.command](env)
        if env.command != "scan" and env.caveats:
            text += "\n" + "\n".join(f"note: {c}" for c in env.caveats)
        print(text)


# ----------------------------------------------------------------- parser


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourfold",
        description="Exact-integer invariants, Einstein obstructions and "
        "homeomorphic-pair search for simply connected 4-manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, csv_ok: bool = False) -> None:
        choices = ["text", "json"] + (["csv"] if csv_ok else [])
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser(
        "invariants", help="convert coordinate systems and report Hitchin-Thorpe verdicts"
    )
    p.add_argument("--e", type=int)
    p.add_argument("--sigma", type=int)
    p.add_argument("--c1sq", type=int)
    p.add_argument("--chi", type=int)
    p.add_argument("--b2plus", type=int)
    p.add_argument("--b2minus", type=int)
    p.add_argument("--parity", choices=["even", "odd"])
    add_format(p)

    p = sub.add_parser("pair", help="the Horikawa-based Einstein/no-Einstein pair")
    p.add_argument("--i", type=_nonneg_int, required=True)
    p.add_argument("--i-min", type=_nonneg_int, default=0)
    add_format(p)

    p = sub.add_parser("horikawa", help="the double-cover surface and its ampleness verdicts")
    p.add_argument("--i", type=_nonneg_int, required=True)
    add_format(p)

    p = sub.add_parser(
        "obstruct", help="blowup obstruction for X with given (e, sigma) as a k-fold blowup"
    )
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--k", type=_nonneg_int, required=True)
    p.add_argument("--b2plus", type=int, required=True)
    add_format(p)

    p = sub.add_parser("homeo", help="Freedman homeomorphism test on two type specs")
    p.add_argument("spec_a", metavar="SPEC_A")
    p.add_argument("spec_b", metavar="SPEC_B")
    add_format(p)

    p = sub.add_parser("scan", help="sweep a chi range for verified pairs")
    p.add_argument("--chi-min", type=int, required=True)
    p.add_argument("--chi-max", type=int, required=True)
    add_format(p, csv_ok=True)

    return parser


def _dispatch(args: argparse.Namespace) -> ReportEnvelope:
    preset = os.environ.get(PERSSON_REGION_ENV, DEFAULT_PERSSON_PRESET)
    if args.command == "invariants":
        return cmd_invariants(
            {
                "e": args.e,
                "sigma": args.sigma,
                "c1sq": args.c1sq,
                "chi": args.chi,
                "b2plus": args.b2plus,
                "b2minus": args.b2minus,
                "parity": args.parity,
            }
        )
    if args.command == "pair":
        return cmd_pair(args.i, args.i_min, preset)
    if args.command == "horikawa":
        return cmd_horikawa(args.i)
    if args.command == "obstruct":
        return cmd_obstruct(args.e, args.sigma, args.k, args.b2plus)
    if args.command == "homeo":
        return cmd_homeo(args.spec_a, args.spec_b)
    if args.command == "scan":
        return cmd_scan(args.chi_min, args.chi_max, preset)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        env = _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FourfoldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _render(env, getattr(args, "format", "text"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
