"""Command-line client for the experiment service.

Thin client: flags and an optional flat ``key = value`` config file are
assembled into a request, posted to the service (in-process by default, or
a remote instance via --server), and the response is written as CSV plus a
JSON summary.

Exit codes: 0 success, 2 configuration error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VERIFY = 3

RUN_COLUMNS = (
    "trial", "algorithm", "objective", "comm_rounds", "iterations",
    "total_evals", "gain_msgs", "action_msgs", "payload_bytes",
)
SWEEP_COLUMNS = (
    "comm_range", "objective", "comm_rounds", "iterations",
    "total_evals", "gain_msgs", "action_msgs", "payload_bytes",
)

_INT_KEYS = {"grid_w", "grid_h", "n_agents", "seed", "trials"}
_FLOAT_KEYS = {"sense_radius"}
_STR_KEYS = {"algorithm"}


class CliConfigError(Exception):
    pass


def parse_config_file(path: str) -> dict:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    values: dict = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliConfigError(f"cannot read config file: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in _INT_KEYS:
            values[key] = _parse_int(key, value)
        elif key in _FLOAT_KEYS:
            values[key] = _parse_float(key, value)
        elif key in _STR_KEYS:
            values[key] = value
        elif key == "comm_range":
            values[key] = _parse_comm_range(value)
        elif key == "sweep":
            values[key] = parse_sweep_spec(value)
        else:
            raise CliConfigError(f"{path}:{lineno}: unknown key '{key}'")
    return values


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise CliConfigError(f"{key}: not an integer: {value!r}") from exc


def _parse_float(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError as exc:
        raise CliConfigError(f"{key}: not a number: {value!r}") from exc


def _parse_comm_range(value: str):
    parts = [p.strip() for p in value.split(",")]
    floats = [_parse_float("comm_range", p) for p in parts]
    return floats[0] if len(floats) == 1 else floats


def parse_sweep_spec(spec: str) -> list[float]:
    """``a:b:step`` inclusive of ``b`` when it lands on the lattice."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise CliConfigError(f"sweep: expected a:b:step, got {spec!r}")
    a, b, step = (_parse_float("sweep", p) for p in parts)
    if step <= 0 or b < a:
        raise CliConfigError("sweep: need step > 0 and b >= a")
    out = []
    value = a
    while value <= b + 1e-9:
        out.append(round(value, 9))
        value += step
    return out


def build_request(args: argparse.Namespace) -> tuple[dict, list[float] | None]:
    values: dict = {}
    if args.config:
        values.update(parse_config_file(args.config))
    if args.seed is not None:
        values["seed"] = args.seed
    if args.trials is not None:
        values["trials"] = args.trials
    if args.algo is not None:
        values["algorithm"] = args.algo
    if args.range is not None:
        values["comm_range"] = _parse_comm_range(args.range)
    sweep = values.pop("sweep", None)
    if getattr(args, "sweep", None) is not None:
        sweep = parse_sweep_spec(args.sweep)
    return values, sweep


def make_client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server)
    from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def rows_to_csv(rows: list[dict], columns: tuple[str, ...]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[c] for c in columns])
    return buf.getvalue()


def emit(csv_text: str | None, json_obj: dict, out: str | None) -> None:
    payload = json.dumps(json_obj, sort_keys=True, indent=2) + "\n"
    if out:
        path = Path(out)
        if csv_text is not None:
            path.write_text(csv_text)
            path.with_suffix(".json").write_text(payload)
        else:
            path.write_text(payload)
    else:
        if csv_text is not None:
            sys.stdout.write(csv_text)
        sys.stdout.write(payload)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="gridcover", description=__doc__)
    parser.add_argument("--server", help="base URL of a running service; default runs in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="flat key = value config file")
        p.add_argument("--seed", type=int)
        p.add_argument("--trials", type=int)
        p.add_argument("--algo", choices=["rag", "sequential", "isolated"])
        p.add_argument("--range", help="uniform communication range, or comma list per agent")
        p.add_argument("--out", help="output CSV path (JSON summary beside it); default stdout")

    p_run = sub.add_parser("run", help="run one algorithm over trials")
    add_common(p_run)
    p_sweep = sub.add_parser("sweep", help="mean metrics per communication range")
    add_common(p_sweep)
    p_sweep.add_argument("--sweep", help="range sweep as a:b:step")
    p_verify = sub.add_parser("verify", help="check the suboptimality bound on small instances")
    add_common(p_verify)
    p_compare = sub.add_parser("compare", help="run all algorithms on the same instances")
    add_common(p_compare)

    args = parser.parse_args(argv)
    try:
        scenario, sweep_ranges = build_request(args)
    except CliConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    client = make_client(args.server)
    try:
        if args.command == "run":
            resp = client.post("/run", json=scenario)
            if resp.status_code != 200:
                return _config_failure(resp)
            body = resp.json()
            emit(rows_to_csv(body["rows"], RUN_COLUMNS), body["summary"], args.out)
        elif args.command == "sweep":
            if not sweep_ranges:
                print("config error: sweep requires --sweep a:b:step", file=sys.stderr)
                return EXIT_CONFIG
            resp = client.post("/sweep", json={"scenario": scenario, "ranges": sweep_ranges})
            if resp.status_code != 200:
                return _config_failure(resp)
            body = resp.json()
            emit(rows_to_csv(body["rows"], SWEEP_COLUMNS), {"ranges": len(body["rows"])}, args.out)
        elif args.command == "verify":
            resp = client.post("/verify", json=scenario)
            if resp.status_code != 200:
                return _config_failure(resp)
            body = resp.json()
            emit(None, body, args.out)
            if not body["ok"]:
                return EXIT_VERIFY
        elif args.command == "compare":
            resp = client.post("/compare", json=scenario)
            if resp.status_code != 200:
                return _config_failure(resp)
            body = resp.json()
            emit(rows_to_csv(body["rows"], RUN_COLUMNS), body["summaries"], args.out)
    finally:
        client.close()
    return EXIT_OK


def _config_failure(resp) -> int:
    try:
        detail = resp.json().get("detail")
    except ValueError:
        detail = resp.text
    print(f"config error: {detail}", file=sys.stderr)
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
