"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure,
3 integrity error (a coefficient that should be a nonnegative polynomial
in the cycle product is not).
"""
from __future__ import annotations

import csv
import inspect
import json
import random
import re
import sys
from typing import Any, Sequence

import click

from . import catabolism as cb
from . import verify as vf
from . import wreath as wr
from .core import canon, multipartitions, word_of_multitableau
from .lr_charge import (
    RectTriple, charge, enumerate_lr_multitableaux, is_lr_word, ks_via_tableaux,
    rotate_once, weight_arrows,
)
from .poly import ArrowLaurent, IntegrityError, unipoly_str
from .ks_recurrence import ks_via_recurrence
from .symfunc import datum_from_triple, hl_triple, is_dominant, mp_order_key, prefactor

EXIT_USAGE, EXIT_VERIFY, EXIT_INTEGRITY = 1, 2, 3


class VerificationFailure(Exception):
    pass


# ---- encoding ----

def arrow_name(i: int, r: int) -> str:
    return f"{i},{(i + 1) % r}"


def encode_arrows(p: ArrowLaurent) -> dict:
    return {"terms": [
        {"arrows": {arrow_name(i, p.r): x for i, x in enumerate(e)}, "coeff": c}
        for e, c in p.sorted_terms()
    ]}


def encode_uni(coeffs: Sequence[int]) -> dict:
    return {"coeffs": list(coeffs)}


def encode_mp(mp) -> list[list[int]]:
    return [list(p) for p in mp]


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, dict) and "terms" in v:
        if not v["terms"]:
            return "0"
        r = len(v["terms"][0]["arrows"])
        return repr(ArrowLaurent(r, {tuple(t["arrows"].values()): t["coeff"] for t in v["terms"]}))
    if isinstance(v, dict) and "coeffs" in v:
        return unipoly_str(v["coeffs"])
    if isinstance(v, list):
        if v and all(isinstance(x, list) and x and all(isinstance(y, list) for y in x) for x in v if x):
            if any(x for x in v):
                return "|".join("/".join(",".join(map(str, row)) for row in T) for T in v)
        if v and all(isinstance(x, list) for x in v):
            return "|".join(",".join(map(str, x)) for x in v)
        return ",".join(map(str, v))
    return str(v)


def emit(ctx: click.Context, payload: dict) -> None:
    fmt = ctx.obj["out"]
    rows = payload.get("rows")
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
        return
    if rows is None:
        for k, v in payload.items():
            if isinstance(v, list) and all(isinstance(x, str) for x in v):
                if v:
                    click.echo(f"{k}:" + "".join(f"\n  {x}" for x in v))
            else:
                click.echo(f"{k}: {_cell(v)}")
        return
    if not rows and fmt == "pretty":
        click.echo("(no rows)")
    cols: list[str] = []
    for row in rows:
        cols.extend(k for k in row if k not in cols)
    if fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(cols)
        for row in rows:
            w.writerow([_cell(row.get(c, "")) for c in cols])
        return
    table = [cols] + [[_cell(row.get(c, "")) for c in cols] for row in rows]
    widths = [max(len(r[k]) for r in table) for k in range(len(cols))]
    for r in table:
        click.echo("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    for k, v in payload.items():
        if k != "rows":
            click.echo(f"{k}: {_cell(v)}")


# ---- parsing ----

def parse_ints(text: str | None) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}")


def parse_tableau(text: str) -> tuple[tuple[int, ...], ...]:
    """Rows separated by '/', entries by ','."""
    if not text.strip():
        return ()
    return tuple(parse_ints(row) for row in text.split("/"))


def indexed_options(args: Sequence[str], prefix: str, r: int | None = None) -> dict[int, str]:
    """Read '--prefix-K value' pairs left unparsed by click."""
    out: dict[int, str] = {}
    pat = re.compile(rf"--{prefix}-(\d+)(?:=(.*))?$")
    k = 0
    args = list(args)
    while k < len(args):
        m = pat.match(args[k])
        if not m:
            k += 1
            continue
        if m.group(2) is not None:
            out[int(m.group(1))] = m.group(2)
            k += 1
        else:
            if k + 1 >= len(args):
                raise click.UsageError(f"{args[k]} needs a value")
            out[int(m.group(1))] = args[k + 1]
            k += 2
    if r is not None and any(i >= r for i in out):
        raise click.UsageError(f"--{prefix}-K needs 0 <= K < {r}")
    return out


def unknown_args(args: Sequence[str], prefixes: Sequence[str]) -> list[str]:
    bad = []
    skip = False
    for a in args:
        if skip:
            skip = False
            continue
        if any(re.match(rf"--{p}-\d+$", a) for p in prefixes):
            skip = True
        elif not any(re.match(rf"--{p}-\d+=", a) for p in prefixes):
            bad.append(a)
    return bad


def triple(mu: str, eta: str, i1: int, r: int):
    mu_t, eta_t = parse_ints(mu), parse_ints(eta)
    if not eta_t and mu_t:
        eta_t = (1,) * len(mu_t)
    try:
        RectTriple(mu_t, eta_t, i1)
        if not 0 <= i1 < r:
            raise ValueError(f"i1 must lie in 0..{r - 1}")
        D = datum_from_triple(mu_t, eta_t, i1, r)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if not is_dominant(D, r):
        raise click.UsageError(f"mu={mu_t} is not dominant")
    return mu_t, eta_t, D


# ---- commands ----

def _override(key):
    def callback(ctx, param, value):
        if value is not None:
            ctx.obj[key] = value
    return callback


def global_flags(f):
    """Accept the global flags after the subcommand name as well."""
    f = click.option("--out", type=click.Choice(["json", "csv", "pretty"]), default=None,
                     expose_value=False, callback=_override("out"), help="Overrides the global --out.")(f)
    f = click.option("--jobs", type=click.IntRange(min=1), default=None, expose_value=False,
                     callback=_override("jobs"), help="Overrides the global --jobs.")(f)
    f = click.option("--seed", type=int, default=None, expose_value=False,
                     callback=_override("seed"), help="Overrides the global --seed.")(f)
    return f


@click.group()
@click.option("--out", type=click.Choice(["json", "csv", "pretty"]), default="json", show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for sampled suites.")
@click.pass_context
def cli(ctx, out, jobs, seed):
    """Cyclic-quiver parabolic Hall-Littlewood functions and their KS polynomials."""
    ctx.obj = {"out": out, "jobs": jobs, "seed": seed}


@cli.command()
@global_flags
@click.option("--r", "r", type=click.IntRange(min=1), required=True)
@click.option("--mu", default="", help="Rectangle widths, e.g. 2,1.")
@click.option("--eta", default="", help="Rectangle heights; defaults to all ones.")
@click.option("--i1", type=int, default=0, show_default=True)
@click.option("--method", type=click.Choice(["tableau", "recurrence", "operators", "all"]),
              default="operators", show_default=True)
@click.pass_context
def ks(ctx, r, mu, eta, i1, method):
    """KS polynomials for every multipartition of the right size."""
    mu_t, eta_t, D = triple(mu, eta, i1, r)
    N = sum(m * h for m, h in zip(mu_t, eta_t))
    rows = []
    disagree = False
    if method == "all":
        for row in sorted(vf.compare_methods(mu_t, eta_t, i1, r), key=lambda x: mp_order_key(x["lams"])):
            disagree |= not row["agree"]
            rows.append({
                "lams": encode_mp(row["lams"]), "reduced": encode_uni(row["reduced"]),
                "operators": encode_arrows(row["operators"]),
                "recurrence": encode_arrows(row["recurrence"]),
                "tableau": encode_arrows(row["tableau"]), "agree": row["agree"],
            })
    else:
        H = hl_triple(mu_t, eta_t, i1, r) if method == "operators" or not mu_t else None
        for mp in sorted(multipartitions(N, r), key=mp_order_key):
            poly = H.coeff(mp) if H is not None else _ks_one(mp, mu_t, eta_t, i1, r, method)
            pre = prefactor([sum(p) for p in mp], D, r)
            if pre is None:
                if poly:
                    raise IntegrityError(f"nonzero coefficient off the root lattice at {mp}")
                red: tuple[int, ...] = ()
            else:
                red = poly.reduce(pre)
            rows.append({"lams": encode_mp(mp), "reduced": encode_uni(red), "arrows": encode_arrows(poly)})
    emit(ctx, {"r": r, "mu": list(mu_t), "eta": list(eta_t), "i1": i1, "method": method, "rows": rows})
    if disagree:
        raise VerificationFailure("methods disagree")


def _ks_one(mp, mu, eta, i1, r, method) -> ArrowLaurent:
    if method == "tableau":
        return ks_via_tableaux(mp, mu, eta, i1, r)
    return ks_via_recurrence(mp, mu, eta, i1, r)


@cli.command("charge")
@global_flags
@click.option("--mu", required=True)
@click.option("--eta", default="")
@click.option("--word", required=True)
@click.pass_context
def charge_cmd(ctx, mu, eta, word):
    """Charge of an LR word."""
    mu_t, eta_t, _ = triple(mu, eta, 0, 1)
    u = parse_ints(word)
    if not is_lr_word(u, mu_t, eta_t):
        raise click.UsageError(f"{list(u)} is not an LR word for mu={mu_t}, eta={eta_t}")
    emit(ctx, {"mu": list(mu_t), "eta": list(eta_t), "word": list(u), "charge": charge(u, mu_t, eta_t)})


@cli.command(context_settings={"ignore_unknown_options": True, "allow_extra_args": True})
@global_flags
@click.option("--r", "r", type=click.IntRange(min=1), required=True)
@click.option("--mu", default="")
@click.option("--eta", default="")
@click.option("--i1", type=int, default=0, show_default=True)
@click.pass_context
def tableaux(ctx, r, mu, eta, i1):
    """List LR multitableaux of shape --shape-0 ... --shape-(r-1), or with
    --mu-0 ... --mu-(r-1) the cascade-catabolizable multitableaux."""
    bad = unknown_args(ctx.args, ("shape", "mu"))
    if bad:
        raise click.UsageError(f"unexpected arguments: {' '.join(bad)}")
    shapes = indexed_options(ctx.args, "shape", r)
    lams = tuple(canon(parse_ints(shapes.get(i))) for i in range(r))
    mus_opt = indexed_options(ctx.args, "mu", r)
    rows = []
    if mus_opt:
        mus = tuple(canon(parse_ints(mus_opt.get(i))) for i in range(r))
        n = len(cb.dim_vectors(mus))
        for Ts in cb.enumerate_ct(lams, mus):
            u = word_of_multitableau(Ts)
            rows.append({"tableaux": [encode_mp(T) for T in Ts], "word": list(u), "charge": cb.charge_any(u, n)})
        emit(ctx, {"lams": encode_mp(lams), "mus": encode_mp(mus), "rows": rows})
        return
    mu_t, eta_t, _ = triple(mu, eta, i1, r)
    for Ts in enumerate_lr_multitableaux(lams, mu_t, eta_t, i1):
        u = word_of_multitableau(Ts)
        w = weight_arrows(Ts, mu_t, eta_t)
        rows.append({"tableaux": [encode_mp(T) for T in Ts], "word": list(u),
                     "charge": charge(u, mu_t, eta_t), "weight": encode_arrows(w)})
    emit(ctx, {"lams": encode_mp(lams), "mu": list(mu_t), "eta": list(eta_t), "i1": i1, "rows": rows})


@cli.command()
@global_flags
@click.option("--mu", required=True)
@click.option("--eta", default="")
@click.option("--word", required=True)
@click.option("--times", type=click.IntRange(min=0), default=None,
              help="Number of rotations; default is the full orbit.")
@click.pass_context
def rotate(ctx, mu, eta, word, times):
    """Rotate an LR word one letter at a time."""
    mu_t, eta_t, _ = triple(mu, eta, 0, 1)
    u = parse_ints(word)
    if not is_lr_word(u, mu_t, eta_t):
        raise click.UsageError(f"{list(u)} is not an LR word for mu={mu_t}, eta={eta_t}")
    steps = len(u) if times is None else times
    rows = [{"step": 0, "word": list(u), "charge": charge(u, mu_t, eta_t)}]
    cur = u
    for k in range(1, steps + 1):
        cur = rotate_once(cur, mu_t, eta_t)
        rows.append({"step": k, "word": list(cur), "charge": charge(cur, mu_t, eta_t)})
    emit(ctx, {"mu": list(mu_t), "eta": list(eta_t), "rows": rows})


@cli.command(context_settings={"ignore_unknown_options": True, "allow_extra_args": True})
@global_flags
@click.option("--r", "r", type=click.IntRange(min=1), required=True)
@click.option("--d", "d", default=None, help="Amounts removed at each node, e.g. 0,5.")
@click.option("--letter", type=click.IntRange(min=1), default=1, show_default=True)
@click.pass_context
def catabolize(ctx, r, d, letter):
    """Cascading catabolism of --tableau-0 ... --tableau-(r-1) (rows split by
    '/'), or with --mu-0 ... the full cascade test."""
    bad = unknown_args(ctx.args, ("tableau", "mu"))
    if bad:
        raise click.UsageError(f"unexpected arguments: {' '.join(bad)}")
    tabs = indexed_options(ctx.args, "tableau", r)
    Ts = tuple(parse_tableau(tabs.get(i, "")) for i in range(r))
    mus_opt = indexed_options(ctx.args, "mu", r)
    if mus_opt:
        mus = tuple(canon(parse_ints(mus_opt.get(i))) for i in range(r))
        emit(ctx, {"tableaux": [encode_mp(T) for T in Ts], "mus": encode_mp(mus),
                   "catabolizable": cb.is_cascade_catabolizable(Ts, mus)})
        return
    d_t = parse_ints(d)
    if len(d_t) != r:
        raise click.UsageError(f"--d needs {r} entries")
    out = cb.ccat(d_t, Ts, letter)
    emit(ctx, {"tableaux": [encode_mp(T) for T in Ts], "d": list(d_t),
               "census": list(cb.m_vector(Ts, letter)),
               "admitted": out is not None,
               "result": None if out is None else [encode_mp(T) for T in out]})


@cli.group("wreath")
def wreath_group():
    """Graded characters of wreath products."""


@wreath_group.command("frob-ind")
@global_flags
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--r", "r", type=click.IntRange(min=1), required=True)
@click.option("--module", type=click.Choice(sorted(vf.MODULES)), default="trivial", show_default=True)
@click.pass_context
def frob_ind(ctx, n, r, module):
    """Frobenius characteristic of an induced module, by full enumeration
    and by plethysm."""
    ok, lhs, rhs = wr.verify_frob_ind(vf.MODULES[module](n), n, r)
    rows = [{"lams": encode_mp(mp), "enumeration": encode_uni(_dense(lhs.get(mp, {}))),
             "plethysm": encode_uni(_dense(rhs.get(mp, {})))}
            for mp in sorted(set(lhs) | set(rhs), key=mp_order_key)]
    emit(ctx, {"n": n, "r": r, "module": module, "equal": ok, "rows": rows})
    if not ok:
        raise VerificationFailure("induction identity fails")


@wreath_group.command("rmu")
@global_flags
@click.option("--mu", required=True)
@click.option("--r", "r", type=click.IntRange(min=1), required=True)
@click.pass_context
def rmu(ctx, mu, r):
    """Induced graded characteristic of the Garsia-Procesi module against the
    specialized quiver HL function."""
    mu_t = canon(parse_ints(mu))
    out = wr.rmu_identity(mu_t, r)
    rows = [{"lams": encode_mp(mp), "induced": encode_uni(_dense(out["lhs"].get(mp, {}))),
             "hl": encode_uni(_dense(out["hl"].get(mp, {})))}
            for mp in sorted(set(out["lhs"]) | set(out["hl"]), key=mp_order_key)]
    emit(ctx, {"mu": list(mu_t), "r": r, "equal": out["equal"],
               "equal_after_node_reversal": out["equal_after_node_reversal"],
               "plethysm_check": out["pleth_check"], "rows": rows})
    if not (out["equal_after_node_reversal"] and out["pleth_check"]):
        raise VerificationFailure("identity fails")


def _dense(p: dict) -> list[int]:
    if not p:
        return []
    return [p.get(k, 0) for k in range(max(p) + 1)]


@cli.command("verify")
@global_flags
@click.argument("suite")
@click.option("--max-n", type=click.IntRange(min=1), default=None)
@click.option("--max-r", type=click.IntRange(min=1), default=None)
@click.option("--max-s", type=click.IntRange(min=1), default=None)
@click.option("--sample", type=click.IntRange(min=1), default=None,
              help="Check a random subset of this many items (theorem-main, morris).")
@click.pass_context
def verify_cmd(ctx, suite, max_n, max_r, max_s, sample):
    """Run a named verification suite."""
    if suite not in vf.SUITES:
        raise click.UsageError(f"unknown suite {suite!r}; choose from {', '.join(vf.SUITES)}")
    fn = vf.SUITES[suite]
    params = inspect.signature(fn).parameters
    kwargs: dict[str, Any] = {}
    if max_n is not None:
        for key in ("max_n", "max_size", "max_len"):
            if key in params:
                kwargs[key] = max_n
    if max_r is not None and "rs" in params:
        kwargs["rs"] = tuple(range(1, max_r + 1))
    if max_s is not None and "max_s" in params:
        kwargs["max_s"] = max_s
    if "jobs" in params:
        kwargs["jobs"] = ctx.obj["jobs"]
    if sample is not None:
        if "sample" not in params:
            raise click.UsageError(f"suite {suite!r} does not sample")
        kwargs["sample"] = sample
        kwargs["rng"] = random.Random(ctx.obj["seed"])
    res = fn(**kwargs)
    emit(ctx, res.to_dict())
    if not res.ok:
        raise VerificationFailure(f"{suite} failed")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="quiverks",
                 standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except (click.UsageError, click.exceptions.Abort) as exc:
        if isinstance(exc, click.UsageError):
            exc.show()
        return EXIT_USAGE
    except VerificationFailure as exc:
        click.echo(f"verification failure: {exc}", err=True)
        return EXIT_VERIFY
    except IntegrityError as exc:
        click.echo(f"integrity error: {exc}", err=True)
        return EXIT_INTEGRITY
    except ValueError as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE
    return 0


def entry() -> None:
    sys.exit(main())
