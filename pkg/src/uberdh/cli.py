"""Command-line front end.

A thin client over the service API: by default requests are served by the
FastAPI app in-process, and --server URL redirects them to a running
instance.  Exit codes: 0 success, 1 input/validation error, 2 torsion
obstruction, 3 size cap exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import scomplex
from .errors import UberdhError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_TORSION = 2
EXIT_SIZECAP = 3
EXIT_VERIFY = 4

_KIND_EXIT = {"input": EXIT_INPUT, "torsion": EXIT_TORSION, "sizecap": EXIT_SIZECAP}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


class Client:
    """Posts to the in-process app, or to a remote server when given a URL."""

    def __init__(self, server: str | None = None):
        if server:
            import httpx
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            from .service import app
            self._client = TestClient(app)

    def post(self, path, payload):
        resp = self._client.post(path, json=payload)
        return resp.status_code, resp.json()


def _read_complex(path: str | None):
    if path and path != "-":
        with open(path) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return scomplex.parse_input(text)


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
        return
    # plain text tables
    if isinstance(obj, dict) and "entries" in obj:
        for entry in obj["entries"]:
            keys = [k for k in ("p", "q", "j", "k", "i", "display", "degree")
                    if k in entry]
            where = " ".join(f"{k}={entry[k]}" for k in keys)
            tors = f" + torsion{entry['torsion']}" if entry.get("torsion") else ""
            print(f"{where}  rank={entry['rank']}{tors}")
        for k, v in obj.items():
            if k not in ("entries", "coeffs", "schema"):
                if not isinstance(v, (list, dict)):
                    print(f"{k}: {v}")
        return
    print(json.dumps(obj, indent=2))


def _common_options() -> argparse.ArgumentParser:
    # defaults are None so values given before the subcommand survive;
    # build_parser applies the real defaults after parsing
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", help="base URL of a running service "
                        "(default: run in-process)")
    common.add_argument("--coeffs",
                        help="coefficients: z | q | f2 | fp:<prime> (default q)")
    common.add_argument("--workers", type=int,
                        help="process count for the subset table")
    common.add_argument("--cache",
                        help="path for the subset-homology table cache")
    common.add_argument("--format", choices=("json", "table"))
    return common


def build_parser() -> _Parser:
    common = _common_options()
    parser = _Parser(prog="uberdh", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: _Parser(parents=[common], **kw))

    gen = sub.add_parser("generate", help="emit a named complex as JSON")
    gen.add_argument("--shape", required=True,
                     choices=("simplex", "boundary-simplex", "cycle",
                              "icosahedron", "flag", "random"))
    gen.add_argument("--n", type=int)
    gen.add_argument("--edges", help="edge list file for --shape flag "
                     "(one 'u v' pair per line)")
    gen.add_argument("--seed", type=int, help="seed for --shape random")

    hom = sub.add_parser("homology", help="graded homology of the complex")
    hom.add_argument("--reduced", action="store_true")
    hom.add_argument("input", nargs="?")

    uber = sub.add_parser("uber", help="triply graded cube homology")
    uber.add_argument("--zero-degree", action="store_true",
                      help="only the weight-zero bigraded table (fast path)")
    uber.add_argument("input", nargs="?")

    dbl = sub.add_parser("double", help="double homology of the moment-angle complex")
    dbl.add_argument("--table", choices=("double", "hochster"), default="double")
    dbl.add_argument("input", nargs="?")

    mvss = sub.add_parser("mvss", help="anti-star cover spectral sequence pages")
    mvss.add_argument("--variant", choices=("reduced", "unreduced"), default="reduced")
    mvss.add_argument("--page", type=int, choices=(1, 2), default=2)
    mvss.add_argument("input", nargs="?")

    dom = sub.add_parser("domination", help="connected domination polynomial "
                         "of the 1-skeleton")
    dom.add_argument("--eval", type=int, dest="eval_at")
    dom.add_argument("input", nargs="?")

    ver = sub.add_parser("verify", help="check every comparison statement")
    ver.add_argument("input", nargs="?")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.coeffs = args.coeffs or "q"
    args.format = args.format or "json"
    try:
        client = Client(args.server)
        return _dispatch(args, client)
    except UberdhError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _options(args):
    return {"coeffs": args.coeffs, "workers": args.workers,
            "cache_path": args.cache}


def _finish(args, status, body, verify=False):
    if status != 200:
        msg = body.get("error", body) if isinstance(body, dict) else body
        print(f"error: {msg}", file=sys.stderr)
        kind = body.get("kind") if isinstance(body, dict) else None
        return _KIND_EXIT.get(kind, EXIT_INPUT)
    _emit(body, args.format)
    if verify and not body.get("ok", False):
        return EXIT_VERIFY
    return EXIT_OK


def _dispatch(args, client: Client) -> int:
    cmd = args.command
    if cmd == "generate":
        payload = {"shape": args.shape, "n": args.n, "seed": args.seed}
        if args.edges:
            with open(args.edges) as fh:
                payload["edges"] = [[int(x) for x in line.split()]
                                    for line in fh if line.strip()]
        status, body = client.post("/api/generate", payload)
        if status == 200:
            print(json.dumps(body, indent=2))
            return EXIT_OK
        return _finish(args, status, body)

    K = _read_complex(args.input)
    cx = scomplex.to_json_obj(K)
    if cmd == "homology":
        payload = {"complex": cx, "reduced": args.reduced, **_options(args)}
        return _finish(args, *client.post("/api/homology", payload))
    if cmd == "uber":
        payload = {"complex": cx, "zero_degree": args.zero_degree, **_options(args)}
        return _finish(args, *client.post("/api/uber", payload))
    if cmd == "double":
        payload = {"complex": cx, "table": args.table, **_options(args)}
        return _finish(args, *client.post("/api/double", payload))
    if cmd == "mvss":
        payload = {"complex": cx, "variant": args.variant, "page": args.page,
                   **_options(args)}
        return _finish(args, *client.post("/api/mvss", payload))
    if cmd == "domination":
        payload = {"complex": cx, "eval": args.eval_at}
        return _finish(args, *client.post("/api/domination", payload))
    if cmd == "verify":
        payload = {"complex": cx, **_options(args)}
        return _finish(args, *client.post("/api/verify", payload), verify=True)
    raise AssertionError(cmd)


if __name__ == "__main__":
    sys.exit(main())
