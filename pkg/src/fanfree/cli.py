"""Command-line client for the fanfree service.

Every subcommand posts to the corresponding service endpoint — against an
in-process application by default, or a remote base URL via --server — and
wraps the response in a self-describing report: tool version, subcommand,
parameters, input digest, and timestamps.  Graphs travel as graph6 on
stdin/stdout; single results are JSON, batch verification is CSV.

Exit codes: 0 success, 1 forbidden structure present (or an unmet
precondition about one), 2 partial result after budget exhaustion,
64 usage error, 65 malformed input data, 70 internal service error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from datetime import datetime, timezone

from . import __version__

_STDIN_COMMANDS = {"count", "classify", "weights", "check-fan", "check-star", "goodman"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", metavar="URL", help="remote service base URL (default: in-process)")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")

    reads = argparse.ArgumentParser(add_help=False)
    reads.add_argument("--in", dest="infile", metavar="PATH", help="read input from a file instead of stdin")

    p = _Parser(prog="fanfree", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"fanfree {__version__}")
    sub = p.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    sp = sub.add_parser("formula", parents=[common], help="closed-form maximum triangle count of a fan-free graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("ex3", parents=[common], help="closed-form maximum size of a star-free triple system")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("construct", parents=[common], help="emit a named construction as graph6")
    sp.add_argument("--kind", required=True,
                    choices=["odd-extremal", "even-extremal", "hk", "hk-prime", "gl", "k4-packing"])
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int)

    sp = sub.add_parser("count", parents=[common, reads], help="triangle table of a graph6 graph")

    sp = sub.add_parser("classify", parents=[common, reads], help="heavy/medium/light edge classes")
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("weights", parents=[common, reads], help="triangle weight ledger and bound suite")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--scheme", choices=["basic", "refined"], default="basic")
    sp.add_argument("--no-lemmas", action="store_true", help="skip the structural bound suite")

    sp = sub.add_parser("check-fan", parents=[common, reads], help="test for a k-fan (exit 1 if present)")
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("check-star", parents=[common, reads],
                        help="test a triple system for a k-star (exit 1 if present)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, help="vertex count of the triple system")
    sp.add_argument("--from-graph", action="store_true",
                    help="input is a graph6 graph; test its triangle system")

    sp = sub.add_parser("search", parents=[common], help="exhaustive / degree-sequence / hill-climb search")
    sp.add_argument("--mode", choices=["exhaustive", "degseq", "hill"], required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--restarts", type=int, default=8)
    sp.add_argument("--steps", type=int, default=1200)
    sp.add_argument("--degrees", help="comma-separated degree sequence (degseq mode)")
    sp.add_argument("--workers", type=int)

    sp = sub.add_parser("degseq", parents=[common],
                        help="closed-form triangle bounds for the near-regular degree sequence")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--s", type=int, default=0)

    sp = sub.add_parser("goodman", parents=[common, reads], help="complement counting identity on a graph")

    sp = sub.add_parser("verify", parents=[common], help="run the pinned verification suite")
    sp.add_argument("--criteria", help="comma-separated criterion numbers (default: all)")
    sp.add_argument("--json", action="store_true", help="emit the JSON report instead of the table")
    sp.add_argument("--corpus", metavar="PATH", help="batch-check a file of graph6 lines (CSV report)")
    sp.add_argument("--k", type=int, help="fan parameter for --corpus")

    return p


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=None)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # the testclient import warns about httpx
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _read_input(args) -> tuple[str, str]:
    """Input text and its sha256 (stdin, or --in when given)."""
    if getattr(args, "infile", None):
        with open(args.infile, "rb") as fh:
            raw = fh.read()
    else:
        raw = sys.stdin.buffer.read()
    return raw.decode("ascii"), hashlib.sha256(raw).hexdigest()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(args, params: dict, payload, digest: str | None, started: str) -> str:
    manifest = {
        "tool": "fanfree",
        "version": __version__,
        "subcommand": args.subcommand,
        "parameters": params,
        "input_sha256": digest,
        "started_at": started,
        "finished_at": _now(),
        "output": args.out or "stdout",
    }
    return json.dumps({"manifest": manifest, "result": payload}, indent=2, sort_keys=True) + "\n"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _fail(resp) -> int:
    try:
        body = resp.json()
    except ValueError:
        body = {"error": resp.text}
    sys.stderr.write(json.dumps(body, sort_keys=True) + "\n")
    if resp.status_code == 409:
        return 1
    if resp.status_code in (400, 413, 422):
        return 65
    return 70


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError:
        return 64
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        return _run(args)
    except (OSError, UnicodeDecodeError) as exc:
        sys.stderr.write(f"fanfree: {exc}\n")
        return 65


def _run(args) -> int:
    started = _now()
    digest = None
    params: dict = {}
    endpoint = None
    sub = args.subcommand

    if sub in _STDIN_COMMANDS:
        text, digest = _read_input(args)

    if sub in ("formula", "ex3"):
        endpoint, params = f"/{sub}", {"n": args.n, "k": args.k}
    elif sub == "construct":
        endpoint, params = "/construct", {"kind": args.kind, "k": args.k, "n": args.n}
    elif sub == "count":
        endpoint, params = "/count", {"graph6": text.strip()}
    elif sub == "classify":
        endpoint, params = "/classify", {"graph6": text.strip(), "k": args.k}
    elif sub == "weights":
        endpoint = "/weights"
        params = {
            "graph6": text.strip(),
            "k": args.k,
            "scheme": args.scheme,
            "lemmas": not args.no_lemmas,
        }
    elif sub == "check-fan":
        endpoint, params = "/check-fan", {"graph6": text.strip(), "k": args.k}
    elif sub == "check-star":
        endpoint = "/check-star"
        params = {"k": args.k, "n": args.n}
        if args.from_graph:
            params["graph6"] = text.strip()
        else:
            params["triples"] = text
    elif sub == "goodman":
        endpoint, params = "/goodman", {"graph6": text.strip()}
    elif sub == "search":
        endpoint = "/search"
        params = {
            "mode": args.mode,
            "k": args.k,
            "n": args.n,
            "budget": args.budget,
            "seed": args.seed,
            "restarts": args.restarts,
            "steps": args.steps,
            "workers": args.workers,
        }
        if args.degrees:
            try:
                params["degrees"] = [int(d) for d in args.degrees.split(",")]
            except ValueError:
                sys.stderr.write("fanfree: --degrees must be comma-separated integers\n")
                return 64
    elif sub == "degseq":
        endpoint, params = "/degseq", {"k": args.k, "s": args.s}
    elif sub == "verify":
        return _verify(args, started)

    with _client(args.server) as client:
        resp = client.post(endpoint, json=params)
        if resp.status_code != 200:
            return _fail(resp)
        payload = resp.json()

    if sub == "construct":
        _emit(payload["graph6"] + "\n", args.out)
        return 0
    _emit(_report(args, params, payload, digest, started), args.out)
    if sub in ("check-fan", "check-star"):
        return 0 if payload.get("fan_free", payload.get("star_free")) else 1
    if sub == "search" and args.mode == "exhaustive" and not payload["exact"]:
        return 2
    return 0


def _verify(args, started: str) -> int:
    if args.corpus is not None:
        return _verify_corpus(args, started)
    criteria = None
    if args.criteria:
        try:
            criteria = [int(c) for c in args.criteria.split(",")]
        except ValueError:
            sys.stderr.write("fanfree: --criteria must be comma-separated integers\n")
            return 64
    params = {"criteria": criteria}
    with _client(args.server) as client:
        resp = client.post("/verify", json=params)
        if resp.status_code != 200:
            return _fail(resp)
        payload = resp.json()
    if args.json:
        _emit(_report(args, params, payload, None, started), args.out)
    else:
        from .acceptance import CriterionResult, format_line

        lines = [
            format_line(CriterionResult(**row))
            for row in payload["results"]
        ]
        verdict = "all criteria passed" if payload["all_passed"] else "FAILURES PRESENT"
        _emit("\n".join(lines) + f"\n{verdict}\n", args.out)
    return 0 if payload["all_passed"] else 1


def _verify_corpus(args, started: str) -> int:
    if args.k is None:
        sys.stderr.write("fanfree: verify --corpus requires --k\n")
        return 64
    try:
        with open(args.corpus, "rb") as fh:
            raw = fh.read()
        lines = raw.decode("ascii").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        sys.stderr.write(f"fanfree: cannot read corpus: {exc}\n")
        return 65
    with _client(args.server) as client:
        resp = client.post("/verify-corpus", json={"lines": lines, "k": args.k})
        if resp.status_code != 200:
            return _fail(resp)
        payload = resp.json()

    buf = io.StringIO()
    writer = csv.writer(buf)
    columns = ["line", "graph6", "n", "edges", "triangles", "fan_free", "max_f", "lemma_ok", "error"]
    writer.writerow(columns)
    for row in payload["rows"]:
        if row["error"] is not None:
            sys.stderr.write(f"fanfree: line {row['line']}: {row['error']}\n")
        writer.writerow(["" if row[c] is None else row[c] for c in columns])
    _emit(buf.getvalue(), args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
