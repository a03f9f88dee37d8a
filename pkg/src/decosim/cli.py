"""Command-line front end: a thin client over the HTTP service.

By default the CLI talks to an in-process instance of the FastAPI app; with
``--server URL`` it targets a running remote service instead.  Exit codes:
0 success, 1 validation/run failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import httpx

from .config import ConfigError, apply_overrides, parse_config


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _cmd_list(args) -> int:
    with _client(args.server) as client:
        resp = client.get("/scenarios")
        resp.raise_for_status()
        for scenario in resp.json()["scenarios"]:
            print(scenario)
    return 0


def _cmd_validate(args) -> int:
    with _client(args.server) as client:
        resp = client.post("/validate")
        resp.raise_for_status()
        body = resp.json()
    for check in body["checks"]:
        status = "ok" if check["passed"] else "FAIL"
        detail = f"  ({check['detail']})" if check["detail"] else ""
        print(f"{status:4s} {check['name']}{detail}")
    if not body["ok"]:
        print("validation failed", file=sys.stderr)
        return 1
    return 0


def _cmd_run(args) -> int:
    try:
        conf = parse_config(args.config)
        conf = apply_overrides(
            conf, seed=args.seed, tau=args.tau, t_max=args.t_max, steps=args.steps, dim=args.dim
        )
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    with _client(args.server) as client:
        resp = client.post("/runs", json={"config": conf.model_dump()})
        if resp.status_code != 200:
            print(f"error: run failed: {resp.json().get('detail', resp.text)}", file=sys.stderr)
            return 1
        body = resp.json()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"{body['scenario']}.csv"
    csv_path.write_text(body["csv"], newline="\n")
    (out / "manifest.json").write_text(
        json.dumps(body["manifest"], indent=2, sort_keys=True) + "\n", newline="\n"
    )
    print(f"wrote {csv_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decosim",
        description="Energy-decoherence simulator: scenario runs, validation, figure data.",
    )
    parser.add_argument("--server", help="URL of a running decosim service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario from a JSON config file")
    run.add_argument("--config", required=True, help="path to the scenario config")
    run.add_argument("--out", required=True, help="output directory for CSV + manifest")
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--tau", type=float, default=None)
    run.add_argument("--t-max", dest="t_max", type=float, default=None)
    run.add_argument("--steps", type=int, default=None)
    run.add_argument("--dim", type=int, default=None)
    run.set_defaults(func=_cmd_run)

    validate = sub.add_parser("validate", help="run the invariant suite")
    validate.set_defaults(func=_cmd_validate)

    lst = sub.add_parser("list", help="print scenario ids")
    lst.set_defaults(func=_cmd_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
