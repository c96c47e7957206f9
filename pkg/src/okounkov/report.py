"""Batch certification over a weight grid: delimited tables and figures.

A grid file is TOML with one ``[[run]]`` table per group::

    [[run]]
    type = "A"
    rank = 2
    grid = 2                     # every multiplicity vector in {0,1,2}^rank
    reference = "fflv"           # optional: "fflv" or "gz"

    [[run]]
    type = "C"
    rank = 3
    weights = [[1, 0, 0], [1, 1, 0]]        # orthogonal coordinates
    # multiplicities = [[1, 0, 0]]          # or omega coordinates

Weights are certified independently, in parallel when ``jobs > 1``; rows
come back in grid order whatever the scheduling.
"""

from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import product
from pathlib import Path
from typing import Optional

try:
    import tomllib as tomli
except ModuleNotFoundError:  # Python < 3.11
    import tomli

from .errors import ValidationError
from .nobody import CertificationReport, compare_with_reference, reference_polytope
from .polytope import to_json
from .rootdata import DominantWeight, GroupType, from_multiplicities

log = logging.getLogger(__name__)

COLUMNS = ("group", "weight", "multiplicities", "certified", "image_dimension", "image_degree",
           "relative_volume", "normalized_volume", "degree", "lattice_index", "vertices",
           "f_vector", "matches_fflv", "reference", "verdict")


@dataclass(frozen=True)
class GridEntry:
    weight: DominantWeight
    reference: Optional[str] = None


def default_grid_path() -> Path:
    return Path(str(resources.files("okounkov") / "data" / "default_grid.toml"))


def load_grid(path) -> list[GridEntry]:
    with open(path, "rb") as fh:
        cfg = tomli.load(fh)
    runs = cfg.get("run")
    if not runs:
        raise ValidationError(f"{path}: no [[run]] tables")
    out: list[GridEntry] = []
    for run in runs:
        group = GroupType(str(run["type"]).upper(), int(run["rank"]))
        ref = run.get("reference")
        if ref is not None and ref not in ("fflv", "gz"):
            raise ValidationError(f"{path}: unknown reference {ref!r}")
        weights: list[DominantWeight] = []
        if "grid" in run:
            top = int(run["grid"])
            weights += [from_multiplicities(group, m) for m in product(range(top + 1), repeat=group.rank)]
        for m in run.get("multiplicities", []):
            weights.append(from_multiplicities(group, m))
        for lam in run.get("weights", []):
            weights.append(DominantWeight(group, tuple(Fraction(str(x)) for x in lam)))
        if not weights:
            raise ValidationError(f"{path}: run for {group} lists no weights")
        out += [GridEntry(w, ref) for w in weights]
    return out


def certification_to_dict(rep: CertificationReport) -> dict:
    res = rep.result
    w = res.weight
    return {
        "group": str(w.group),
        "weight": [str(x) for x in w.lam],
        "multiplicities": list(w.multiplicities()),
        "certified": res.certified,
        "verdict": rep.verdict,
        "normalized_volume": str(res.normalized_volume),
        "degree": res.degree,
        "image_dimension": res.image_dimension,
        "image_degree": res.image_degree,
        "relative_volume": str(res.relative_volume),
        "lattice_index": res.lattice_index,
        "matches_fflv": res.matches_fflv,
        "warnings": list(res.warnings),
        "body": to_json(res.body),
        "reference": None if rep.reference is None else to_json(rep.reference),
        "diagnostics": rep.diagnostics,
    }


def _run_one(entry: GridEntry) -> dict:
    ref = None if entry.reference is None else reference_polytope(entry.weight, entry.reference)
    rep = compare_with_reference(entry.weight, ref, ehrhart_max=2)
    row = certification_to_dict(rep)
    row["reference_kind"] = entry.reference
    return row


def run_grid(entries: list[GridEntry], jobs: int = 1) -> list[dict]:
    if jobs <= 1:
        return [_run_one(e) for e in entries]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, entries))


def row_ok(row: dict) -> bool:
    """Certified, and equal to the reference when one was requested."""
    if not row["certified"]:
        return False
    return row["reference_kind"] is None or row["verdict"] == "equal"


def _flat(row: dict) -> dict:
    body = row["body"]
    return {
        "group": row["group"],
        "weight": ",".join(row["weight"]),
        "multiplicities": ",".join(map(str, row["multiplicities"])),
        "certified": row["certified"],
        "image_dimension": row["image_dimension"],
        "image_degree": row["image_degree"],
        "relative_volume": row["relative_volume"],
        "normalized_volume": row["normalized_volume"],
        "degree": row["degree"],
        "lattice_index": row["lattice_index"],
        "vertices": len(body["vertices"]),
        "f_vector": ",".join(map(str, row["diagnostics"]["body_f_vector"])),
        "matches_fflv": "" if row["matches_fflv"] is None else row["matches_fflv"],
        "reference": row["reference_kind"] or "",
        "verdict": row["verdict"],
    }


def write_tsv(rows: list[dict], path) -> None:
    with open(path, "w", newline="") as fh:
        wr = csv.DictWriter(fh, fieldnames=COLUMNS, delimiter="\t")
        wr.writeheader()
        for row in rows:
            wr.writerow(_flat(row))


def write_json(rows: list[dict], path) -> None:
    Path(path).write_text(json.dumps(rows, indent=1) + "\n")


def format_table(rows: list[dict]) -> str:
    keys = ("group", "weight", "certified", "image_dimension", "relative_volume", "image_degree", "verdict")
    table = [keys] + [tuple(str(_flat(r)[k]) for k in keys) for r in rows]
    widths = [max(len(t[i]) for t in table) for i in range(len(keys))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(t, widths)).rstrip() for t in table]
    ok = sum(row_ok(r) for r in rows)
    lines.append(f"{ok}/{len(rows)} certified")
    return "\n".join(lines)


def render_figures(rows: list[dict], outdir) -> list[Path]:
    """Volume-vs-degree scatter, plus a 3-D picture of every 3-dimensional body."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from mpl_toolkits.mplot3d.art3d import Poly3DCollection

    from .polytope import from_json

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    groups = sorted({r["group"] for r in rows})
    for g in groups:
        sub = [r for r in rows if r["group"] == g]
        xs = [r["image_degree"] for r in sub]
        ys = [float(Fraction(r["relative_volume"])) for r in sub]
        ax.scatter(xs, ys, label=g, s=18)
    top = max([1] + [r["image_degree"] for r in rows])
    # degrees are >= 1 (q! times the leading coefficient of a positive polynomial)
    ax.plot([1, top], [1, top], color="0.6", lw=0.8, zorder=0)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("degree")
    ax.set_ylabel("normalized volume of body")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    path = outdir / "volume_vs_degree.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    for row in rows:
        if row["body"]["dim"] != 3:
            continue
        body = from_json(row["body"])
        if body.affine_dim == 3:
            path = outdir / f"body_{_tag(row)}.png"
            _draw_body(plt, Poly3DCollection, body, row, path)
            written.append(path)
    return written


def _tag(row: dict) -> str:
    return row["group"] + "_" + "_".join(x.replace("/", "h").replace("-", "m") for x in row["weight"])


def _draw_body(plt, Poly3DCollection, body, row: dict, path) -> None:
    verts = [tuple(float(x) for x in v) for v in body.vertices]
    faces = []
    for mask in body.facets.masks:
        faces.append(_cyclic([verts[i] for i in range(len(verts)) if mask >> i & 1]))
    fig = plt.figure(figsize=(4, 4))
    ax = fig.add_subplot(projection="3d")
    ax.add_collection3d(Poly3DCollection(faces, alpha=0.35, edgecolor="k", linewidths=0.6))
    xs, ys, zs = zip(*verts)
    ax.scatter(xs, ys, zs, color="k", s=8)
    for setter, vals in ((ax.set_xlim, xs), (ax.set_ylim, ys), (ax.set_zlim, zs)):
        setter(min(vals) - 0.1, max(vals) + 0.1)
    ax.set_xlabel("u1")
    ax.set_ylabel("u2")
    ax.set_zlabel("u3")
    ax.set_title(f"{row['group']} ({','.join(row['weight'])})", fontsize=9)
    fig.savefig(path, dpi=110, bbox_inches="tight")
    plt.close(fig)


def _cyclic(pts):
    """Order the vertices of a planar convex polygon around its centroid."""
    c = [sum(p[i] for p in pts) / len(pts) for i in range(3)]
    u = _sub(pts[0], c)
    w = _cross(_normal(pts), u)
    return sorted(pts, key=lambda p: math.atan2(_dotf(w, _sub(p, c)), _dotf(u, _sub(p, c))))


def _sub(p, q):
    return [a - b for a, b in zip(p, q)]


def _dotf(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def _normal(pts):
    best = [0.0, 0.0, 0.0]
    for i in range(1, len(pts)):
        for j in range(i + 1, len(pts)):
            c = _cross(_sub(pts[i], pts[0]), _sub(pts[j], pts[0]))
            if _dotf(c, c) > _dotf(best, best):
                best = c
    return best
