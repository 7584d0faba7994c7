"""Command line entry point.

Exit codes: 0 when every check passes, 1 on a failed verdict, 2 on a
ring-spec parse error, 3 when a ring exceeds the exhaustive cap.
"""
from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click

from . import report as rep
from .closed_form import compare_closed_form_vs_bruteforce, triangular_strong_quotient
from .corpus import CORPUS, build_corpus, corpus_ring
from .errors import CapacityError, SpecParseError, StrongQuotError
from .localization import localize
from .ore import CACHE_ENV, DEFAULT_CAP, MultSet, exhaustive_catalog, max_denominator_sets
from .ring import DEFAULT_SIZE_CAP, FiniteRing
from .ringspec import load_ring
from .strong import semisimplicity_criterion, strong_profile
from .theorems import observations, verify_theorem_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAPACITY = 0, 1, 2, 3
SIDE_CHOICES = ("left", "right", "both", "all")


def _sides(side: str) -> tuple[str, ...]:
    return ("left", "right", "both") if side == "all" else (side,)


_CORPUS_NAMES = {e.name: e.constructor for e in CORPUS}


def _load(arg: str, cap: int) -> FiniteRing:
    """A file, an inline constructor, or a corpus name when no such file exists."""
    if arg in _CORPUS_NAMES and not Path(arg).exists():
        arg = _CORPUS_NAMES[arg]
    return load_ring(arg, Path.cwd(), max(cap, DEFAULT_SIZE_CAP))


def _require_cap(R: FiniteRing, cap: int) -> None:
    if R.size > cap:
        raise CapacityError(f"{R.label} has {R.size} elements, above the exhaustive cap {cap}; raise --cap")


# --------------------------------------------------------------------------
# per-ring jobs (module level so that they can run in worker processes)
# --------------------------------------------------------------------------


def job_enumerate(arg: str, opts: dict) -> tuple[dict, bool]:
    R = _load(arg, opts["cap"])
    _require_cap(R, opts["cap"])
    body = {"ring": rep.ring_section(R, arg), "catalogs": []}
    for side in _sides(opts["side"]):
        cat = exhaustive_catalog(R, side, opts["cap"], cache_dir=opts["cache"])
        section = rep.catalog_section(cat, max_denominator_sets(R, side, opts["cap"], cache_dir=opts["cache"]))
        scan = cat.pair_scan()
        section["product_violations"] = scan.violations
        if opts.get("list_all"):
            section["sets"] = [sorted(S.members) for S in cat.sets]
        body["catalogs"].append(section)
    ok = all(c["product_violations"] == 0 for c in body["catalogs"])
    return body, ok


def job_localize(arg: str, opts: dict) -> tuple[dict, bool]:
    R = _load(arg, opts["cap"])
    members = frozenset(opts["members"])
    bad = [m for m in members if not 0 <= m < R.size]
    if bad:
        raise SpecParseError(f"elements {sorted(bad)} are not in {R.label}", 1, "--set")
    body: dict = {"ring": rep.ring_section(R, arg), "localizations": []}
    ok = True
    for side in _sides(opts["side"]):
        S = MultSet(R, members, side)
        try:
            loc = localize(R, S)
        except (CapacityError, SpecParseError):
            raise
        except StrongQuotError as exc:
            body["localizations"].append({"side": side, "denominators": sorted(members),
                                          "error": f"{type(exc).__name__}: {exc}"})
            ok = False
            continue
        section = rep.localization_section(loc)
        ok = ok and all(c["ok"] for c in section["checks"])
        body["localizations"].append(section)
    return body, ok


def job_analyze(arg: str, opts: dict) -> tuple[dict, bool]:
    R = _load(arg, opts["cap"])
    _require_cap(R, opts["cap"])
    body: dict = {"ring": rep.ring_section(R, arg), "profiles": []}
    ok = True
    for side in _sides(opts["side"]):
        p = strong_profile(R, side, opts["cap"], strict=False, cache_dir=opts["cache"])
        section = rep.profile_section(p)
        ss = semisimplicity_criterion(R, side, opts["cap"])
        section["semisimplicity"] = rep.semisimplicity_section(ss)
        ok = ok and p.ok and ss.ok
        body["profiles"].append(section)
    return body, ok


def job_verify(arg: str, opts: dict) -> tuple[dict, bool]:
    R = _load(arg, opts["cap"])
    _require_cap(R, opts["cap"])
    for side in ("left", "right", "both"):
        exhaustive_catalog(R, side, opts["cap"], cache_dir=opts["cache"])
    verdicts = verify_theorem_suite(R, opts["cap"])
    failed = [k for k, v in verdicts.items() if not v.ok]
    body = {
        "ring": rep.ring_section(R, arg),
        "verdicts": rep.verdict_dict(verdicts),
        "passed": len(verdicts) - len(failed),
        "failed": failed,
        "observations": observations(R, opts["cap"]),
    }
    return body, not failed


def _triangular_tokens(arg: str):
    tok = arg.split()
    if len(tok) == 5 and tok[0] == "matrix" and tok[1] in ("lower", "upper") and tok[3] == "gf":
        try:
            return tok[1], int(tok[2]), int(tok[4])
        except ValueError:
            return None
    return None


def job_closed_form(arg: str, opts: dict) -> tuple[dict, bool]:
    tri = _triangular_tokens(arg)
    if tri is not None:
        shape, n, q = tri
        pred = triangular_strong_quotient(q, n, shape, cap=0)
        if pred.size > opts["cap"]:
            body = {"prediction_only": True, "triangular": {
                "shape": shape, "n": n, "q": q, "size": pred.size, "corner": list(pred.corner),
                "T_size": pred.T_size, "strong_radical_size": pred.radical_size,
                "quotient_size": pred.quotient_size, "maximal_count": pred.max_count}}
            return body, True
    R = _load(arg, opts["cap"])
    _require_cap(R, opts["cap"])
    c = compare_closed_form_vs_bruteforce(R, opts["cap"])
    body = {"ring": rep.ring_section(R, arg), "prediction_only": False, "closed_form": rep.closed_form_section(c)}
    return body, c.ok


JOBS = {
    "enumerate": job_enumerate,
    "localize": job_localize,
    "analyze": job_analyze,
    "verify": job_verify,
    "closed-form": job_closed_form,
}


def _run_one(command: str, arg: str, opts: dict) -> tuple[dict | None, int, str | None]:
    """``(report, exit_code, error message)`` for one ring argument."""
    start = time.perf_counter()
    try:
        body, ok = JOBS[command](arg, opts)
    except SpecParseError as exc:
        return None, EXIT_PARSE, f"error: {exc}"
    except CapacityError as exc:
        return None, EXIT_CAPACITY, f"error: {exc}"
    except StrongQuotError as exc:
        return None, EXIT_FAIL, f"error: {type(exc).__name__}: {exc}"
    timing = {"seconds": round(time.perf_counter() - start, 3)} if opts["timing"] else None
    return rep.make_report(command, body, ok, timing), (EXIT_OK if ok else EXIT_FAIL), None


def _run_many(command: str, args: tuple[str, ...], opts: dict, jobs: int):
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_one, command, a, opts) for a in args]
            return [f.result() for f in futures]
    return [_run_one(command, a, opts) for a in args]


def _emit(results, fmt: str, out: str | None) -> int:
    reports = [r for r, _, _ in results if r is not None]
    for _, _, err in results:
        if err:
            click.echo(err, err=True)
    if reports:
        if len(results) == 1:
            text = rep.render(reports[0], fmt)
        elif fmt == "json":
            text = rep.to_json({"schema": rep.SCHEMA, "reports": reports})
        else:
            text = "\n".join(rep.to_text(r) for r in reports)
        if out:
            Path(out).write_text(text)
        else:
            click.echo(text, nl=False)
    return max(code for _, code, _ in results)


def common_options(f):
    f = click.option("--timing", is_flag=True, help="Add wall-clock timing to the report.")(f)
    f = click.option("--jobs", "-j", type=int, default=1, show_default=True,
                     help="Analyze several rings in parallel processes.")(f)
    f = click.option("--cache", type=click.Path(file_okay=False), envvar=CACHE_ENV, default=None,
                     help=f"Directory for cached catalogs (default: ${CACHE_ENV}).")(f)
    f = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report here.")(f)
    f = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)(f)
    f = click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True,
                     help="Largest ring size enumerated exhaustively.")(f)
    return f


def _opts(side: str, cap: int, cache, timing: bool, **extra) -> dict:
    return {"side": side, "cap": cap, "cache": cache, "timing": timing, **extra}


@click.group()
@click.version_option(package_name="strongquot")
def main() -> None:
    """Strong quotient rings of finite rings, computed by brute force.

    RING arguments are ring-spec files or inline constructors such as
    'cyclic 6' or 'matrix lower 2 gf 3', or corpus names such as l2_f2.
    """


@main.command("enumerate")
@click.argument("rings", nargs=-1, required=True)
@click.option("--side", type=click.Choice(SIDE_CHOICES), default="left", show_default=True)
@click.option("--list", "list_all", is_flag=True, help="List every denominator set.")
@common_options
def enumerate_cmd(rings, side, list_all, cap, fmt, out, cache, jobs, timing):
    """Denominator sets, their ass ideals and the maximal ones."""
    opts = _opts(side, cap, cache, timing, list_all=list_all)
    sys.exit(_emit(_run_many("enumerate", rings, opts, jobs), fmt, out))


@main.command("localize")
@click.argument("ring")
@click.option("--set", "members", required=True, help="Space- or comma-separated element indices.")
@click.option("--side", type=click.Choice(SIDE_CHOICES), default="left", show_default=True)
@common_options
def localize_cmd(ring, members, side, cap, fmt, out, cache, jobs, timing):
    """Localize RING at the given set (must be a denominator set)."""
    try:
        elems = [int(t) for t in members.replace(",", " ").split()]
    except ValueError:
        click.echo(f"error: --set: cannot read {members!r} as element indices", err=True)
        sys.exit(EXIT_PARSE)
    opts = _opts(side, cap, cache, timing, members=elems)
    sys.exit(_emit([_run_one("localize", ring, opts)], fmt, out))


@main.command("analyze")
@click.argument("rings", nargs=-1, required=True)
@click.option("--side", type=click.Choice(SIDE_CHOICES), default="all", show_default=True)
@common_options
def analyze_cmd(rings, side, cap, fmt, out, cache, jobs, timing):
    """Strong profile: CL, T, the radicals and the strong quotient ring."""
    sys.exit(_emit(_run_many("analyze", rings, _opts(side, cap, cache, timing), jobs), fmt, out))


@main.command("verify")
@click.argument("rings", nargs=-1, required=True)
@common_options
def verify_cmd(rings, cap, fmt, out, cache, jobs, timing):
    """Run every identity on RINGS; exit 1 if one fails."""
    sys.exit(_emit(_run_many("verify", rings, _opts("all", cap, cache, timing), jobs), fmt, out))


@main.command("closed-form")
@click.argument("rings", nargs=-1, required=True)
@common_options
def closed_form_cmd(rings, cap, fmt, out, cache, jobs, timing):
    """Closed-form predictions and their difference from brute force."""
    sys.exit(_emit(_run_many("closed-form", rings, _opts("left", cap, cache, timing), jobs), fmt, out))


@main.group("corpus")
def corpus_group() -> None:
    """The standard corpus of small rings."""


@corpus_group.command("list")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def corpus_list(fmt):
    rows = []
    for e in CORPUS:
        R = corpus_ring(e.name)
        rows.append({"name": e.name, "label": R.label, "size": R.size, "constructor": e.constructor,
                     "digest": R.digest})
    if fmt == "json":
        click.echo(rep.to_json({"schema": rep.SCHEMA, "corpus": rows}), nl=False)
    else:
        for r in rows:
            click.echo(f"{r['name']:<14}{r['size']:>4}  {r['label']:<24}{r['constructor']}")


@corpus_group.command("build")
@click.option("--dir", "directory", type=click.Path(file_okay=False), default="corpus", show_default=True)
def corpus_build(directory):
    """Write one table file per corpus ring and print their digests."""
    for e, R, path in build_corpus(directory):
        click.echo(f"{R.digest}  {path}")


if __name__ == "__main__":  # pragma: no cover
    main()
