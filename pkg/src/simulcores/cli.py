"""Command-line interface.

Usage:
    simulcores count --s 3 --t 4
    simulcores count --s 2 --t 3 --p 1
    simulcores genfun --s 6 --t 9 --trunc 30 --format csv
    simulcores verify --catalogue --trunc 2000
    simulcores verify dream --p 3 --k 1 --l 3 --trunc 200
    simulcores scan --s 9 --t 12 --mod 2 --amax 56 --trunc 3000
    simulcores fayers --t 3
    simulcores abacus 5,3,3 --d 3

Exit status: 0 on success, 1 when a check is refuted, 2 on usage errors.
"""

from __future__ import annotations

import csv
import io
import json
import math
from datetime import datetime, timezone

import click

from simulcores import congruence, enumeration, genfun, qseries
from simulcores.abacus import from_partition, parse_runner_view, runner_view, to_partition
from simulcores.partitions import HookProgression, Partition, enumerate_cores, total_core_count

SCHEMA = 1
DEFAULT_TRUNC = 500
SUITES = (
    "catalogue",
    "extra",
    "dream",
    "pentagonal",
    "jacobi",
    "xiayao",
    "robbins",
    "g-recurrence",
    "f-recurrence",
    "constant-term",
    "conjecture2",
    "all",
)


def _record(ctx, command: str, meta: dict, rows: list) -> dict:
    head = {"command": command, **meta}
    if ctx.obj.get("timestamp", True):
        head["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return {"schema": SCHEMA, "meta": head, "rows": rows}


def _emit_json(record: dict):
    click.echo(json.dumps(record, sort_keys=True, separators=(",", ":")))


def _emit_csv(header: list[str], rows: list):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


def _usage(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
@click.option("--no-timestamp", is_flag=True, help="Omit the timestamp from JSON metadata.")
@click.pass_context
def cli(ctx, no_timestamp):
    """Simultaneous cores avoiding arithmetic progressions of hook lengths."""
    ctx.ensure_object(dict)
    ctx.obj["timestamp"] = not no_timestamp


@cli.command()
@click.option("--s", "s", type=click.IntRange(min=1), required=True)
@click.option("--t", "t", type=click.IntRange(min=0), required=True)
@click.option("--p", "p", type=click.IntRange(min=0), default=None, help="Stop the progression at s + p t.")
@click.option("--max-n", type=click.IntRange(min=0), default=None, help="Print c(0..max-n) instead of the total.")
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@click.pass_context
def count(ctx, s, t, p, max_n, fmt):
    """Count partitions avoiding the hooks s, s+t, s+2t, ..."""
    H = HookProgression(s, t, p)
    if max_n is not None:
        if p is not None or t == 0:
            route, counts = "brute-force", enumerate_cores(H, max_n)
        else:
            req = genfun.GenFunRequest(s, t, max_n)
            counts = list(genfun.gf_composite(s, t, max_n, req).coeffs)
            route = req.route
        rows = list(enumerate(counts))
        total = None
    else:
        if p is not None or t == 0:
            route = "brute-force"
            total = _usage(total_core_count, H)
        elif math.gcd(s, t) != 1:
            raise click.UsageError(f"gcd({s}, {t}) > 1: infinitely many cores; pass --max-n")
        else:
            route = "closed-form"
            total = enumeration.fayers_count(s, t)
        rows = []
    meta = {"s": s, "t": t, "p": p, "max_n": max_n, "route": route, "hooks": str(H)}
    if fmt == "json":
        record = _record(ctx, "count", meta, [{"n": n, "count": c} for n, c in rows])
        if total is not None:
            record["meta"]["total"] = total
        _emit_json(record)
    elif fmt == "csv":
        if rows:
            _emit_csv(["n", "coefficient"], rows)
        else:
            _emit_csv(["total"], [[total]])
    else:
        click.echo(f"# {H}  route: {route}")
        if total is not None:
            click.echo(str(total))
        for n, c in rows:
            click.echo(f"{n} {c}")


@cli.command(name="genfun")
@click.option("--s", "s", type=click.IntRange(min=1), required=True)
@click.option("--t", "t", type=click.IntRange(min=1), required=True)
@click.option("--trunc", type=click.IntRange(min=0), default=DEFAULT_TRUNC, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.pass_context
def genfun_cmd(ctx, s, t, trunc, fmt):
    """Coefficients of C_{s(t)}(q) through q^trunc."""
    req = genfun.GenFunRequest(s, t, trunc)
    series = genfun.gf_composite(s, t, trunc, req)
    if fmt == "json":
        meta = {"s": s, "t": t, "d": req.d, "trunc": trunc, "route": req.route}
        _emit_json(_record(ctx, "genfun", meta, [{"n": n, "coefficient": c} for n, c in series.rows()]))
    else:
        _emit_csv(["n", "coefficient"], series.rows())


def _run_suite(name: str, opts: dict) -> list[tuple[str, bool, str]]:
    """Each result is (label, ok, detail); conjecture2 rows never fail."""
    N = opts["trunc"]
    out = []
    if name in ("catalogue", "all"):
        report, results = congruence.verify_paper_congruences(N)
        for row, res in zip(report.rows, results):
            out.append((row["claim"], row["ok"], str(res)))
    if name in ("extra", "all"):
        report, results = congruence.verify_paper_congruences(N, congruence.extra_congruences())
        for row, res in zip(report.rows, results):
            out.append((row["claim"], row["ok"], str(res)))
    if name in ("dream", "all"):
        cases = [(opts["p"], opts["k"], opts["l"])] if name == "dream" and opts["p"] else [
            (2, 1, 1), (3, 1, 1), (3, 1, 3), (3, 2, 1), (2, 2, 1)
        ]
        for p, k, l in cases:
            ok = _usage(qseries.verify_dream_cong, p, k, l, N)
            out.append((f"dream p={p} k={k} l={l}", ok, f"mod {p**k} to order {N}"))
    if name in ("pentagonal", "all"):
        ok = qseries.pochhammer(1, 1, N) == qseries.pentagonal_series(N)
        out.append(("pentagonal", ok, f"to order {N}"))
    if name in ("jacobi", "all"):
        ok = qseries.pochhammer(1, 3, N) == qseries.jacobi_cube(N)
        out.append(("jacobi cube", ok, f"to order {N}"))
    if name in ("xiayao", "all"):
        out.append(("xia-yao 2-dissection", qseries.xia_yao_identity(N), f"exact to order {N}"))
        out.append(("xia-yao corollary", qseries.xia_yao_corollary(N), f"mod 3 to order {N}"))
    if name in ("robbins", "all"):
        out.append(("3-core octagonal", qseries.robbins_2core3_check(N), f"mod 2 to order {N}"))
    if name in ("g-recurrence", "all"):
        r = enumeration.check_g_recurrence(opts["tmax"], opts["smax"])
        out.append((r.name, r.ok, r.summary()))
    if name in ("f-recurrence", "all"):
        r = enumeration.check_f_recurrence(opts["tmax"])
        out.append((r.name, r.ok, r.summary()))
    if name in ("constant-term", "all"):
        r = enumeration.check_constant_term(opts["tmax"])
        out.append((r.name, r.ok, r.summary()))
    if name in ("conjecture2", "all"):
        for row in enumeration.check_conjecture2(opts["tmax"]).rows:
            verdict = "divisible" if row["ok"] else f"NOT divisible (f({row['root']}) = {row['value']})"
            out.append((f"conjecture2 t={row['t']}", True, f"report only: {verdict}"))
    return out


@cli.command()
@click.argument("suite", type=click.Choice(SUITES), required=False)
@click.option("--catalogue", is_flag=True, help="Same as the 'catalogue' suite.")
@click.option("--trunc", type=click.IntRange(min=0), default=DEFAULT_TRUNC, show_default=True)
@click.option("--p", "p", type=int, default=None)
@click.option("--k", "k", type=click.IntRange(min=1), default=1)
@click.option("--l", "l", type=click.IntRange(min=1), default=1)
@click.option("--tmax", type=click.IntRange(min=1), default=12, show_default=True)
@click.option("--smax", type=click.IntRange(min=1), default=12, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def verify(ctx, suite, catalogue, trunc, p, k, l, tmax, smax, fmt):
    """Run identity and congruence checks to a finite order."""
    if catalogue:
        suite = suite or "catalogue"
    if suite is None:
        raise click.UsageError("name a suite or pass --catalogue")
    opts = {"trunc": trunc, "p": p, "k": k, "l": l, "tmax": tmax, "smax": smax}
    results = _run_suite(suite, opts)
    ok = all(r[1] for r in results)
    if fmt == "json":
        rows = [{"check": a, "ok": b, "detail": c} for a, b, c in results]
        _emit_json(_record(ctx, "verify", {"suite": suite, "trunc": trunc, "ok": ok}, rows))
    else:
        for label, good, detail in results:
            click.echo(f"{'PASS' if good else 'FAIL'}  {label}: {detail}")
        click.echo(f"{'all checks passed' if ok else 'FAILURES'} (verified to order {trunc}, not proved)")
    ctx.exit(0 if ok else 1)


@cli.command()
@click.option("--s", "s", type=click.IntRange(min=1), required=True)
@click.option("--t", "t", type=click.IntRange(min=1), required=True)
@click.option("--mod", "m", type=click.IntRange(min=0), required=True, help="0 scans for exact vanishing.")
@click.option("--amax", type=click.IntRange(min=1), required=True)
@click.option("--trunc", type=click.IntRange(min=0), default=DEFAULT_TRUNC, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="json")
@click.pass_context
def scan(ctx, s, t, m, amax, trunc, fmt):
    """Search for progressions An+b on which c_{s(t)} vanishes mod m (heuristic)."""
    series = genfun.gf_composite(s, t, trunc)
    hits = _usage(congruence.scan_ap_zero, series, m, amax, trunc)
    if fmt == "json":
        rows = [{"A": h.A, "B": list(h.B), "m": h.m, "status": f"verified-to-{trunc}"} for h in hits]
        meta = {"s": s, "t": t, "mod": m, "amax": amax, "trunc": trunc, "heuristic": True}
        _emit_json(_record(ctx, "scan", meta, rows))
    else:
        for h in hits:
            click.echo(str(h))


@cli.command()
@click.option("--t", "t", type=click.IntRange(min=1), required=True)
@click.option("--s", "s", type=click.IntRange(min=1), default=None)
@click.pass_context
def fayers(ctx, t, s):
    """Print f_t(s), and the count 2^(s-t) f_t(s) / t! when s is given."""
    f = enumeration.fayers_poly(t)
    click.echo(f.format())
    if s is not None:
        if math.gcd(s, t) != 1:
            raise click.UsageError(f"gcd({s}, {t}) > 1: the count is infinite")
        n = enumeration.fayers_count(s, t)
        click.echo(f"count {n}")
        click.echo(f"binomial sum {enumeration.chs_large_p(s, t)}")
        if s + t <= 12:
            click.echo(f"brute force {total_core_count(HookProgression(s, t))}")
    for report in (
        enumeration.check_constant_term(t),
        enumeration.check_shape(t),
        enumeration.check_f_recurrence(t),
    ):
        click.echo(report.summary())


@cli.command()
@click.argument("partition", required=False, default="")
@click.option("--d", "d", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--read", "read", type=click.File("r"), default=None, help="Parse a rendered abacus instead.")
def abacus(partition, d, read):
    """Render a partition (e.g. 5,3,3) on d runners: o = bead, . = spacer."""
    if read is not None:
        view = _usage(parse_runner_view, read.read())
        click.echo(str(to_partition(view.to_beads())))
        return
    lam = _usage(Partition.parse, partition)
    click.echo(runner_view(from_partition(lam), d).render())


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
