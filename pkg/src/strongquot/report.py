"""Deterministic reports (``schema: 1``) as JSON or plain text.

Sets are rendered as sorted index lists; element names are added when the
ring carries them.  Timing appears only when requested so that repeated runs
stay byte-identical.
"""
from __future__ import annotations

import json
from typing import Any, Iterable

from .closed_form import ClosedFormComparison
from .localization import LocalizedRing
from .ore import DenominatorCatalog
from .ring import FiniteRing, is_semisimple, jacobson_radical, units
from .strong import SemisimplicityReport, StrongProfile
from .verdict import Verdict

SCHEMA = 1


def element_set(R: FiniteRing, xs: Iterable[int]) -> dict:
    xs = sorted(xs)
    out: dict[str, Any] = {"size": len(xs), "members": xs}
    if R.names is not None:
        out["names"] = [R.name(x) for x in xs]
    return out


def ring_section(R: FiniteRing, source: str | None = None) -> dict:
    out = {
        "label": R.label,
        "size": R.size,
        "digest": R.digest,
        "commutative": R.is_commutative,
        "units": len(units(R)),
        "radical": element_set(R, jacobson_radical(R).members),
        "semisimple": is_semisimple(R),
    }
    if source is not None:
        out["source"] = source
    return out


def catalog_section(cat: DenominatorCatalog, maximal: list | None = None) -> dict:
    R = cat.ring
    out: dict[str, Any] = {
        "side": cat.side,
        "exhaustive": cat.exhaustive,
        "denominator_sets": len(cat),
        "submonoids_explored": cat.explored,
        "distinct_ass_ideals": [sorted(a) for a in cat.ass_ideals],
    }
    if maximal is not None:
        out["maximal"] = [
            {"set": element_set(R, S.members), "ass": sorted(S.ass.members)} for S in maximal
        ]
    return out


def localization_section(loc: LocalizedRing) -> dict:
    R = loc.source
    return {
        "side": loc.side,
        "denominators": element_set(R, loc.denominators.members),
        "kernel": sorted(loc.kernel),
        "carrier": {"label": loc.carrier.label, "size": loc.carrier.size, "digest": loc.carrier.digest},
        "canonical_map": list(loc.canonical_map.image),
        "checks": verdict_table(loc.check()),
    }


def profile_section(p: StrongProfile) -> dict:
    R = p.ring
    Q = p.strong_quotient.carrier
    return {
        "side": p.side,
        "catalog": catalog_section(p.catalog, p.maximal),
        "CL": element_set(R, p.strongly_localizable),
        "T": element_set(R, p.T),
        "localization_radical": sorted(p.localization_radical.members),
        "strong_radical": sorted(p.strong_radical.members),
        "strong_quotient": {"label": Q.label, "size": Q.size, "digest": Q.digest,
                            "semisimple": is_semisimple(Q), "units": len(units(Q))},
        "crosschecks": verdict_table(p.crosschecks.values()),
    }


def semisimplicity_section(rep: SemisimplicityReport) -> dict:
    return {
        "strong_statements": dict(sorted(rep.strong.items())),
        "classical_statements": dict(sorted(rep.classical.items())),
        "strong_equivalent": rep.strong_equivalent,
        "classical_equivalent": rep.classical_equivalent,
        "consequences": verdict_table(rep.consequences),
    }


def closed_form_section(c: ClosedFormComparison) -> dict:
    R, an = c.ring, c.analysis
    out: dict[str, Any] = {
        "components": an.s,
        "lifted_idempotents": [R.name(x) for x in an.lifted_idempotents],
        "admissible": sorted(sorted(I) for I in an.admissible),
        "minimal_admissible": [sorted(I) for I in an.minimal_admissible],
        "e": R.name(an.e_star),
        "predicted_maximal": [element_set(R, S) for S in sorted(an.predicted_maxden, key=sorted)],
        "predicted_T": element_set(R, an.predicted_T),
        "predicted_strong_radical": sorted(an.predicted_radical.members),
        "predicted_quotient_size": an.predicted_quotient.size,
        "differences": [{"quantity": d.quantity, "predicted": d.predicted, "computed": d.computed}
                        for d in c.differences],
        "checks": verdict_table(c.checks),
        "cardinality_law": verdict_table([c.cardinality_equality]),
        "agrees": c.agrees,
    }
    if c.triangular is not None:
        t = c.triangular
        out["triangular"] = {"shape": t.shape, "n": t.n, "q": t.q, "corner": list(t.corner),
                             "T_size": t.T_size, "strong_radical_size": t.radical_size,
                             "quotient_size": t.quotient_size}
    return out


def verdict_table(verdicts: Iterable[Verdict]) -> list[dict]:
    return [{"name": v.name, "ok": v.ok, **({"detail": v.detail} if v.detail else {})} for v in verdicts]


def verdict_dict(named: dict[str, Verdict]) -> list[dict]:
    return [{"name": k, "ok": v.ok, **({"detail": v.detail} if v.detail else {})} for k, v in named.items()]


def make_report(command: str, body: dict, ok: bool, timing: dict | None = None) -> dict:
    out = {"schema": SCHEMA, "command": command, "ok": ok, **body}
    if timing is not None:
        out["timing"] = timing
    return out


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------


def to_json(report: Any) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _scalar(v: Any) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def _is_flat(v: Any) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        atoms = (int, str, float)
        return all(isinstance(x, atoms) or (isinstance(x, list) and all(isinstance(y, atoms) for y in x))
                   for x in v)
    return True


def _text(v: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(v, dict):
        if "name" in v and "ok" in v and set(v) <= {"name", "ok", "detail"}:
            line = f"{pad}[{'PASS' if v['ok'] else 'FAIL'}] {v['name']}"
            if v.get("detail"):
                line += f": {v['detail']}"
            out.append(line)
            return
        for k, x in v.items():
            if _is_flat(x):
                out.append(f"{pad}{k}: {_scalar(x)}")
            else:
                out.append(f"{pad}{k}:")
                _text(x, indent + 1, out)
    elif isinstance(v, list):
        for x in v:
            if _is_flat(x):
                out.append(f"{pad}- {_scalar(x)}")
            elif isinstance(x, dict) and set(x) <= {"name", "ok", "detail"}:
                _text(x, indent, out)
            else:
                out.append(f"{pad}-")
                _text(x, indent + 1, out)
    else:
        out.append(f"{pad}{_scalar(v)}")


def to_text(report: dict) -> str:
    out: list[str] = []
    _text(report, 0, out)
    return "\n".join(out) + "\n"


def render(report: dict, fmt: str = "text") -> str:
    return to_json(report) if fmt == "json" else to_text(report)
