"""Command-line front end.

The CLI is a thin client of the HTTP service: every subcommand builds a
request, posts it (by default to an in-process instance of the app, or to
a remote server via --server), and renders the JSON payload.  Exit codes:
0 success, 1 domain refusal (e.g. delta on a non-rational graph, caps),
2 input error (bad file, parse failure, unknown names).
"""

from __future__ import annotations

import json
import sys

import click
import httpx

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INPUT = 2


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    # in-process: drive the ASGI app directly through starlette's sync client
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app
    return TestClient(app, raise_server_exceptions=False)


class Session:
    def __init__(self, server, fmt):
        self.server = server
        self.json = fmt == "json"

    def post(self, path, payload):
        with _client(self.server) as client:
            resp = client.post(path, json=payload)
        try:
            body = resp.json()
        except json.JSONDecodeError:
            click.echo(f"error: bad response from server ({resp.status_code})",
                       err=True)
            sys.exit(EXIT_INPUT)
        if resp.status_code == 200:
            return body
        detail = body.get("detail", {})
        if isinstance(detail, dict):
            category = detail.get("category", "input")
            message = detail.get("message", str(detail))
        else:
            category, message = "input", str(detail)
        if self.json:
            click.echo(json.dumps({"error": {"category": category,
                                             "message": message}}))
        else:
            click.echo(f"error ({category}): {message}", err=True)
        sys.exit(EXIT_REFUSED if resp.status_code == 409 else EXIT_INPUT)

    def emit(self, payload, table_lines):
        if self.json:
            click.echo(json.dumps(payload, sort_keys=True))
        else:
            for line in table_lines:
                click.echo(line)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        click.echo(f"error (input): cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_INPUT)


@click.group()
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", help="output format")
@click.option("--server", default=None, metavar="URL",
              help="use a running service instead of in-process compute")
@click.pass_context
def main(ctx, fmt, server):
    """Exact invariants of curve germs on resolution graphs."""
    ctx.obj = Session(server, fmt)


@main.command()
@click.argument("file", metavar="FILE")
@click.pass_obj
def validate(s: Session, file):
    """Check a graph file against the pipeline hypotheses."""
    body = s.post("/validate", {"graph": _read(file)})
    lines = ["ok" if body["ok"] else "invalid"]
    lines += [f"  [{f['rule']}] {f['message']} ({f['element']})"
              for f in body["failures"]]
    s.emit(body, lines)
    if not body["ok"]:
        sys.exit(EXIT_REFUSED)


@main.command()
@click.argument("file", metavar="FILE")
@click.pass_obj
def info(s: Session, file):
    """Summary: det, |H|, Z_K, Z_min, rationality, Kulikov property."""
    body = s.post("/info", {"graph": _read(file)})
    factors = body["invariant_factors"]
    s.emit(body, [
        f"vertices:          {' '.join(body['labels'])}",
        f"det M:             {body['det']}",
        f"|H|:               {body['order_h']}"
        + (f"  (invariant factors {factors})" if factors else ""),
        f"Z_K:               {body['zk']}",
        f"Z_min:             {body['zmin']}",
        f"rational:          {'yes' if body['rational'] else 'no'}",
        f"kulikov:           {'yes' if body['kulikov'] else 'no'}",
        f"r_v = -(Z_min,E_v): {body['rv']}",
    ])


@main.command()
@click.argument("file", metavar="FILE")
@click.option("--cap", default=10000, show_default=True)
@click.pass_obj
def classes(s: Session, file, cap):
    """Enumerate the discriminant group H by canonical representatives."""
    body = s.post("/classes", {"graph": _read(file), "cap": cap})
    s.emit(body, [f"|H| = {body['order_h']}"] + body["classes"])


@main.command()
@click.argument("file", metavar="FILE")
@click.pass_obj
def zk(s: Session, file):
    """Canonical cycle Z_K."""
    body = s.post("/zk", {"graph": _read(file)})
    s.emit(body, [body["cycle"]])


@main.command()
@click.argument("file", metavar="FILE")
@click.pass_obj
def zmin(s: Session, file):
    """Fundamental cycle Z_min."""
    body = s.post("/zmin", {"graph": _read(file)})
    s.emit(body, [body["cycle"]])


def _trace_lines(body):
    lines = [body["cycle"]]
    if body.get("trace") is not None:
        for step in body["trace"]:
            lines.append(f"step {step['step']}: +E_{step['vertex']} "
                         f"(pairing was {step['pairing']})")
    return lines


@main.command()
@click.argument("file", metavar="FILE")
@click.option("--class", "class_vec", required=True, metavar="VEC",
              help='class representative: "p/q,..." or "dual:a1,...,an"')
@click.option("--trace", is_flag=True)
@click.pass_obj
def sh(s: Session, file, class_vec, trace):
    """Minimal antinef cycle s_h of the class of VEC."""
    body = s.post("/sh", {"graph": _read(file), "cycle": class_vec,
                          "trace": trace})
    s.emit(body, _trace_lines(body))


@main.command()
@click.argument("file", metavar="FILE")
@click.option("--cycle", "cycle_vec", required=True, metavar="VEC")
@click.option("--trace", is_flag=True)
@click.pass_obj
def closure(s: Session, file, cycle_vec, trace):
    """Antinef closure s(l') of a dual-lattice cycle."""
    body = s.post("/closure", {"graph": _read(file), "cycle": cycle_vec,
                               "trace": trace})
    s.emit(body, _trace_lines(body))


@main.command(name="oracle-sh")
@click.argument("file", metavar="FILE")
@click.option("--class", "class_vec", required=True, metavar="VEC")
@click.option("--bound", default=12, show_default=True)
@click.pass_obj
def oracle_sh(s: Session, file, class_vec, bound):
    """Brute-force s_h over a bounded box (testing oracle)."""
    body = s.post("/oracle-sh", {"graph": _read(file), "cycle": class_vec,
                                 "bound": bound})
    s.emit(body, [body["cycle"]])


@main.command()
@click.argument("file", metavar="FILE")
@click.option("--curve", required=True, metavar="NAME")
@click.option("--force", is_flag=True,
              help="print the chi-expression even on non-rational graphs")
@click.pass_obj
def delta(s: Session, file, curve, force):
    """Delta invariant of a named curve configuration."""
    body = s.post("/delta", {"graph": _read(file), "curve": curve,
                             "force": force})
    label = f" [{body['label']}]" if body.get("label") else ""
    s.emit(body, [
        f"curve:        {body['curve']}  (r = {body['branches']})",
        f"l'_C:         {body['curve_cycle']}",
        f"class h:      {body['h']}",
        f"chi(-l'_C):   {body['chi_neg_cycle']}",
        f"s_[Z_K+l'_C]: {body['s_term']}   chi = {body['chi_s_term']}",
        f"delta:        {body['delta']}{label}",
    ] + ([f"Blache A:     {body['blache_a']}"] if body.get("blache_a")
         is not None else []))


def _value_command(name, path, help_text):
    @main.command(name=name, help=help_text)
    @click.argument("file", metavar="FILE")
    @click.option("--curve", required=True, metavar="NAME")
    @click.option("--force", is_flag=True)
    @click.pass_obj
    def cmd(s: Session, file, curve, force):
        body = s.post(path, {"graph": _read(file), "curve": curve,
                             "force": force})
        label = f" [{body['label']}]" if body.get("label") else ""
        s.emit(body, [f"{body['value']}{label}"])
    return cmd


_value_command("kappa", "/kappa", "Kappa invariant (equals delta; rational only).")
_value_command("blache", "/blache", "Blache correction term A_{X,0}(C).")


def _pair_command(name, path, help_text):
    @main.command(name=name, help=help_text)
    @click.argument("file", metavar="FILE")
    @click.option("--curves", required=True, metavar="A,B")
    @click.pass_obj
    def cmd(s: Session, file, curves):
        names = [c.strip() for c in curves.split(",")]
        if len(names) != 2:
            click.echo("error (input): --curves wants exactly two names",
                       err=True)
            sys.exit(EXIT_INPUT)
        body = s.post(path, {"graph": _read(file), "curves": names})
        s.emit(body, [body["value"]])
    return cmd


_pair_command("mumford", "/mumford",
              "Mumford intersection -(l'_{C1}, l'_{C2}).")
_pair_command("hironaka", "/hironaka",
              "Hironaka intersection multiplicity (rational only).")


@main.command(name="verify-duality")
@click.argument("file", metavar="FILE")
@click.option("--cap", default=10000, show_default=True)
@click.pass_obj
def verify_duality(s: Session, file, cap):
    """Check chi(s_{-h}) = chi(s_{[Z_K]+h}) over all classes."""
    body = s.post("/verify-duality", {"graph": _read(file), "cap": cap})
    lines = [f"|H| = {body['order_h']}: "
             + ("identity holds for every class" if body["ok"]
                else f"{len(body['failures'])} failure(s)")]
    for f in body["failures"]:
        lines.append(f"  h = ({f['h']}): chi(s_-h) = {f['chi_s_neg_h']} "
                     f"but chi(s_[Z_K]+h) = {f['chi_s_zk_plus_h']}")
    s.emit(body, lines)


@main.command(name="gen-cyclic")
@click.option("--d", "d", required=True, type=int)
@click.option("--q", "q", required=True, type=int)
@click.option("-o", "--output", default=None, metavar="FILE")
@click.pass_obj
def gen_cyclic(s: Session, d, q, output):
    """Emit the minimal-resolution bamboo of 1/d(1,q) as a graph file."""
    body = s.post("/gen-cyclic", {"d": d, "q": q})
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(body["graph"])
        if not s.json:
            click.echo(f"wrote {output}")
        else:
            s.emit(body, [])
    else:
        s.emit(body, [body["graph"].rstrip("\n")])


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn
    uvicorn.run("plumbinv.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
