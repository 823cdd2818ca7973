import json
from datetime import datetime, timezone

from .config import RunConfig
from .runner import Report

SCHEMA_VERSION = 1


def header(config: RunConfig) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "command": config.command,
        "input": config.input,
        "rep": config.rep,
        "N": config.N,
        "r": config.r,
    }
    if config.command == "cyclic":
        out["p"] = config.p
    if config.command == "torsion":
        out["n"] = config.n
    if config.command == "mahler":
        out["n_max"] = config.n_max
    if config.command == "checks":
        out["seed"] = config.seed
    if config.timestamp:
        out["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return out


def render_json(report: Report, config: RunConfig) -> str:
    document = {
        **header(config),
        "result": report.data,
        "notes": report.notes,
        "failed_checks": report.failed,
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render_text(report: Report, config: RunConfig) -> str:
    head = header(config)
    lines = [f"# {config.command} " + " ".join(f"{k}={v}" for k, v in head.items() if k not in ("command", "schema") and v is not None)]
    lines.extend(report.summary)
    if report.notes:
        lines.append("")
        lines.extend(f"note: {note}" for note in report.notes)
    if report.failed:
        lines.append("")
        lines.append("FAILED checks: " + ", ".join(report.failed))
    return "\n".join(lines) + "\n"


def render(report: Report, config: RunConfig) -> str:
    if config.format == "json":
        return render_json(report, config)
    if config.format == "csv":
        return report.csv or ""
    return render_text(report, config)
