"""
Trajectory CSV files.

Layout:
    # key=<json value>          metadata, one line per key, sorted
    t,x,y,z[,color]             header (t,radius,angle,z[,color] for polar)
    <rows>                      17 significant digits, '.' decimal, '\\n' endings

Seventeen significant digits make read(write(traj)) bit-identical.
Row numbers in errors are 1-based file line numbers.
"""

from __future__ import annotations

import io
import json
import logging
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from lorenz_covering.dynamics.models import CoordKind
from lorenz_covering.errors import TrajectoryFormatError
from lorenz_covering.integrate.models import Trajectory

log = logging.getLogger(__name__)

HEADERS = {
    CoordKind.cartesian: ("t", "x", "y", "z"),
    CoordKind.polar: ("t", "radius", "angle", "z"),
}
COLOR_COLUMN = "color"
# Bulky diagnostics that are summarized rather than embedded.
_SKIPPED_META = ("step_log",)



def _json_default(v: Any) -> Any:
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, np.generic):
        return v.item()
    raise TypeError(f"cannot serialise {type(v).__name__}")


# ── Writing ───────────────────────────────────────────────────────────────────

def write_csv(traj: Trajectory, path: str | Path) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    header = list(HEADERS[traj.coords])
    if traj.colors is not None:
        header.append(COLOR_COLUMN)

    with out.open("w", encoding="utf-8", newline="\n") as fh:
        for key in sorted(traj.meta):
            if key in _SKIPPED_META:
                fh.write(f"# {key}_entries={len(traj.meta[key])}\n")
                continue
            fh.write(f"# {key}={json.dumps(traj.meta[key], sort_keys=True, default=_json_default)}\n")
        fh.write(",".join(header) + "\n")
        for i in range(len(traj)):
            row = [format(float(traj.times[i]), ".17g")]
            row.extend(format(float(v), ".17g") for v in traj.states[i])
            if traj.colors is not None:
                row.append(str(int(traj.colors[i])))
            fh.write(",".join(row) + "\n")

    log.info("Wrote %d samples to %s", len(traj), out)
    return out


# ── Reading ───────────────────────────────────────────────────────────────────

def _parse_meta(line: str, lineno: int) -> tuple[str, Any]:
    body = line[1:].strip()
    key, sep, value = body.partition("=")
    if not sep or not key:
        raise TrajectoryFormatError(f"metadata line must read '# key=value', got {line!r}", row=lineno)
    try:
        return key.strip(), json.loads(value)
    except json.JSONDecodeError:
        return key.strip(), value


def _header_kind(fields: list[str], lineno: int) -> tuple[CoordKind, bool]:
    for kind, names in HEADERS.items():
        if tuple(fields) == names:
            return kind, False
        if tuple(fields) == (*names, COLOR_COLUMN):
            return kind, True
    raise TrajectoryFormatError(
        f"header mismatch: expected 't,x,y,z[,color]' or 't,radius,angle,z[,color]', got {','.join(fields)!r}",
        row=lineno,
    )


def read_csv(path: str | Path) -> Trajectory:
    """
    Read a trajectory written by write_csv.

    Raises:
        TrajectoryFormatError: header mismatch, malformed row (with its line
                               number), or non-increasing time stamps.
    """
    src = Path(path)
    try:
        lines = src.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise TrajectoryFormatError(f"cannot read {src}: {exc.strerror}") from exc

    meta: dict[str, Any] = {}
    idx = 0
    while idx < len(lines) and lines[idx].startswith("#"):
        key, value = _parse_meta(lines[idx], idx + 1)
        meta[key] = value
        idx += 1
    if idx >= len(lines):
        raise TrajectoryFormatError("header mismatch: file has no header line", row=idx + 1)

    header_line = idx + 1
    coords, has_color = _header_kind([f.strip() for f in lines[idx].split(",")], header_line)
    n_cols = 5 if has_color else 4
    body = "\n".join(lines[idx + 1:])
    first_data_line = header_line + 1

    for k, line in enumerate(lines[idx + 1:]):
        if line.count(",") != n_cols - 1:
            raise TrajectoryFormatError(
                f"expected {n_cols} fields, got {line.count(',') + 1}", row=first_data_line + k
            )

    if body.strip():
        df = pd.read_csv(
            io.StringIO(body),
            header=None,
            names=list(range(n_cols)),
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
        )
        numeric = pd.DataFrame(
            {c: pd.to_numeric(df[c], errors="coerce") for c in df.columns}
        )
        bad = numeric.isna().any(axis=1).to_numpy()
        values = numeric.to_numpy(dtype=float)
        bad |= ~np.isfinite(values).all(axis=1)
        if bad.any():
            k = int(np.argmax(bad))
            raise TrajectoryFormatError(
                f"malformed row {','.join(df.iloc[k].astype(str))!r}", row=first_data_line + k
            )
        # Exact decimal-to-double conversion for the float columns.
        exact = pd.read_csv(
            io.StringIO(body), header=None, names=list(range(n_cols)), float_precision="round_trip"
        ).to_numpy(dtype=float)
    else:
        exact = np.empty((0, n_cols))

    times = exact[:, 0]
    steps = np.diff(times)
    if np.any(~(steps > 0.0)):
        k = int(np.argmax(~(steps > 0.0))) + 1
        raise TrajectoryFormatError("time stamps must be strictly increasing", row=first_data_line + k)

    colors = None
    if has_color:
        raw = exact[:, 4]
        if np.any(raw != np.round(raw)) or np.any(raw < 0):
            k = int(np.argmax((raw != np.round(raw)) | (raw < 0)))
            raise TrajectoryFormatError("color must be a non-negative integer", row=first_data_line + k)
        colors = raw.astype(np.int64)

    log.info("Read %d samples from %s", len(times), src)
    return Trajectory(times=times, states=exact[:, 1:4], coords=coords, colors=colors, meta=meta)
