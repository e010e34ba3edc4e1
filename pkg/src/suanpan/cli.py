"""Command-line front end.

All structured output is JSON on stdout. Exit codes: 0 on success, 1 on a
domain error (printed as ``{"error": code, "message": ...}``), 2 on usage
errors (argparse's default). Port, data directory and default rod count
can also come from SUANPAN_PORT, SUANPAN_DATA_DIR and SUANPAN_RODS;
explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .api import make_server, serve_forever
from .classify import classify
from .core import DEFAULT_ROD_COUNT, AbacusConfig, enumerate_inscriptions, normalize, read_value, set_economical
from .errors import DomainError
from .gestures import Trace
from .verbal import Language, parse_words, say
from .worksheet import WorksheetSpec, worksheet_generate


def _env_int(name: str, fallback: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else fallback


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise DomainError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from None


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, ensure_ascii=False)
    sys.stdout.write("\n")


def _language(name: str) -> Language:
    try:
        return Language(name.lower())
    except ValueError:
        raise DomainError(f"unknown language {name!r}; pick from "
                          + ", ".join(l.value for l in Language)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suanpan",
        description="Chinese abacus engine: inscriptions, gestures, techniques, number words.",
    )
    default_rods = _env_int("SUANPAN_RODS", DEFAULT_ROD_COUNT)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("set", help="economical inscription of a number")
    p.add_argument("n", type=int)
    p.add_argument("--rods", type=int, default=default_rods)

    p = sub.add_parser("read", help="value of a config JSON file")
    p.add_argument("config", help="path to a config JSON file")

    p = sub.add_parser("normalize", help="economical form of a config JSON file")
    p.add_argument("config", help="path to a config JSON file")

    p = sub.add_parser("enumerate", help="every inscription of a number")
    p.add_argument("n", type=int)
    p.add_argument("--rods", type=int, default=default_rods)

    p = sub.add_parser("say", help="number words in one language")
    p.add_argument("n", type=int)
    p.add_argument("--lang", required=True)

    p = sub.add_parser("parse-words", help="number words back to the number")
    p.add_argument("words")
    p.add_argument("--lang", required=True)

    p = sub.add_parser("classify", help="technique report for a trace JSON file")
    p.add_argument("trace", help="path to a trace JSON file (object or gesture array)")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--rods", type=int, default=default_rods)

    p = sub.add_parser("worksheet", help="render a worksheet spec JSON file")
    p.add_argument("spec", help="path to a worksheet spec JSON file")
    p.add_argument("--out-dir", help="also write page SVGs into this directory")

    p = sub.add_parser("serve", help="run the local HTTP+JSON API")
    p.add_argument("--port", type=int, default=_env_int("SUANPAN_PORT", 8605))
    p.add_argument("--data-dir", default=os.environ.get("SUANPAN_DATA_DIR", "./sessions"))
    p.add_argument("--rods", type=int, default=default_rods)
    p.add_argument("--host", default="127.0.0.1")

    return parser


def run(args: argparse.Namespace) -> None:
    if args.command == "set":
        _emit(set_economical(args.n, args.rods).to_json())
    elif args.command == "read":
        config = AbacusConfig.from_json(_load_json(args.config))
        _emit({"value": read_value(config)})
    elif args.command == "normalize":
        config = AbacusConfig.from_json(_load_json(args.config))
        _emit(normalize(config).to_json())
    elif args.command == "enumerate":
        _emit([c.to_json() for c in enumerate_inscriptions(args.n, args.rods)])
    elif args.command == "say":
        _emit(say(args.n, _language(args.lang)).to_json())
    elif args.command == "parse-words":
        _emit({"value": parse_words(args.words, _language(args.lang))})
    elif args.command == "classify":
        trace = Trace.from_json(_load_json(args.trace))
        _emit(classify(trace, target=args.target, rod_count=args.rods).to_json())
    elif args.command == "worksheet":
        spec = WorksheetSpec.from_json(_load_json(args.spec))
        document = worksheet_generate(spec)
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            for i, page in enumerate(document.pages):
                (out / f"page{i + 1}.svg").write_text(page, encoding="utf-8")
        _emit({"svg": list(document.pages), "key": {str(k): v for k, v in document.key.items()}})
    elif args.command == "serve":
        server = make_server(port=args.port, data_dir=args.data_dir, rod_count=args.rods, host=args.host)
        host, port = server.server_address[:2]
        print(f"suanpan API on http://{host}:{port} (data in {args.data_dir})", file=sys.stderr)
        serve_forever(server)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run(args)
    except DomainError as err:
        _emit({"error": err.code, "message": err.message})
        return 1
    except ValueError as err:
        _emit({"error": "invalid-input", "message": str(err)})
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
