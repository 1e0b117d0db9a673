"""Command-line front end.

    eqk compute --family A --rank 2 --pair AI --action gamma [--bound 10] [--format json|text]
    eqk atlas --bound 3 [--out DIR]
    eqk verify --max-rank 8 [--format json|text]

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .errors import CapacityError, InvalidInputError
from .involutions import ActionKind, SymmetricPair, catalog, classify_pair
from .kmodule import DEFAULT_ORDER, SUBSET_ORDERS, assemble, atom_counts, graded_ranks
from .oracle import MAX_SWEEP_RANK, full_sweep, golden_su2_su3
from .report import VerificationReport
from .repring import dominant_count, fixed_and_regular_counts, kahler_descriptor
from .rootdata import CartanType

SCHEMA_VERSION = 1
DEFAULT_BOUND = 10
INLINE_CHECK_MAX_BOUND = 20
OUT_DIR_ENV = "EQK_OUT_DIR"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


@dataclass(frozen=True)
class ComputeRequest:
    family: str
    rank: int
    pair: str
    action: str
    params: tuple[int, int] | None = None
    bound: int = DEFAULT_BOUND
    format: str = "json"
    order: str = DEFAULT_ORDER

    def symmetric_pair(self) -> SymmetricPair:
        return SymmetricPair(self.pair, CartanType(self.family, self.rank), self.params)

    def echo(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "rank": self.rank,
            "pair": self.pair,
            "params": list(self.params) if self.params else None,
            "action": self.action,
            "gradingBound": self.bound,
            "subsetOrder": self.order,
        }


def _inline_checks(pair: SymmetricPair, bound: int) -> dict[str, Any]:
    if bound > INLINE_CHECK_MAX_BOUND:
        return {"status": "not-run", "reason": f"grading bound above {INLINE_CHECK_MAX_BOUND}", "checks": []}
    t = pair.cartan_type
    sigma = classify_pair(pair).permutation
    fixed, regular = fixed_and_regular_counts(t, sigma, bound)
    dom = dominant_count(t, bound)
    report = VerificationReport()
    report.add("fixed + 2 regular = dominant", fixed + 2 * regular == dom)
    report.add("dominant - fixed even", all((a - b) % 2 == 0 for a, b in zip(dom, fixed)))
    d = report.to_dict()
    return {"status": d["overall"], "checks": d["checks"]}


def run_compute(req: ComputeRequest) -> dict[str, Any]:
    """Build the report document for one (group, pair, action)."""
    if req.bound < 0:
        raise InvalidInputError("grading bound must be >= 0")
    if req.order not in SUBSET_ORDERS:
        raise InvalidInputError(f"unknown subset order {req.order!r}")
    pair = req.symmetric_pair()
    action = ActionKind.parse(req.action)
    kind = classify_pair(pair)
    desc = assemble(pair, action, req.order)
    ranks = graded_ranks(desc, req.bound)
    per_atom = atom_counts(desc.sigma, req.bound)
    kd = kahler_descriptor(pair.cartan_type)
    return {
        "schemaVersion": SCHEMA_VERSION,
        "request": req.echo(),
        "group": str(pair.cartan_type),
        "involution": kind.name,
        "sigma": list(desc.sigma),
        "wedge": [
            {
                "subset": list(w.subset),
                "shape": w.shape.value,
                "name": w.name,
                "suspension": w.suspension,
                "epsilon": w.epsilon,
            }
            for w in desc.summands
        ],
        "atoms": {
            f"K{deg}": [{"kind": a.kind.value, "origin": list(a.origin)} for a in desc.atoms(deg)]
            for deg in (0, 1)
        },
        "gradedRanks": {
            "bound": req.bound,
            "K0": ranks.k0.tolist(),
            "K1": ranks.k1.tolist(),
            "perAtom": {k.value: v.tolist() for k, v in per_atom.items()},
        },
        "kahler": {"K0Rank": kd.even_rank, "K1Rank": kd.odd_rank},
        "checks": _inline_checks(pair, req.bound),
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_text(doc: dict[str, Any]) -> str:
    req = doc["request"]
    params = f" (p,q)={tuple(req['params'])}" if req["params"] else ""
    lines = [
        f"group {doc['group']}, pair {req['pair']}{params}, action {req['action']} ({doc['involution']})",
        f"sigma: {doc['sigma']}",
        "wedge: " + " v ".join(w["name"] for w in doc["wedge"]),
    ]
    for deg in ("K0", "K1"):
        kinds = sorted(a["kind"] for a in doc["atoms"][deg])
        lines.append(f"{deg} atoms: {', '.join(kinds) if kinds else '-'}")
    gr = doc["gradedRanks"]
    lines.append(f"graded ranks, degrees 0..{gr['bound']}:")
    lines.append(f"  K0: {gr['K0']}")
    lines.append(f"  K1: {gr['K1']}")
    lines.append(f"Kahler ranks over R(G): K0 {doc['kahler']['K0Rank']}, K1 {doc['kahler']['K1Rank']}")
    lines.append(f"checks: {doc['checks']['status']}")
    return "\n".join(lines) + "\n"


def atlas_filename(pair: SymmetricPair, action: ActionKind) -> str:
    return f"{pair.slug}-{action.value}.json"


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run_atlas(bound: int, out_dir: str | os.PathLike, grading_bound: int = DEFAULT_BOUND) -> list[Path]:
    """Write one document per catalog pair of rank <= bound and action, plus index.json.

    Files written by a run that fails part-way are removed again.
    """
    if bound < 0:
        raise InvalidInputError("atlas bound must be >= 0")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    entries = []
    try:
        for pair in catalog(bound):
            for action in ActionKind:
                req = ComputeRequest(
                    pair.cartan_type.family, pair.cartan_type.rank, pair.label, action.value,
                    pair.params, grading_bound,
                )  # fmt: skip
                path = out / atlas_filename(pair, action)
                _atomic_write(path, dumps(run_compute(req)))
                written.append(path)
                entries.append({"file": path.name, "pair": str(pair), "action": action.value})
        index = {
            "schemaVersion": SCHEMA_VERSION,
            "rankBound": bound,
            "gradingBound": grading_bound,
            "count": len(entries),
            "documents": entries,
        }
        index_path = out / "index.json"
        _atomic_write(index_path, dumps(index))
    except BaseException:
        for p in written:
            p.unlink(missing_ok=True)
        raise
    return written + [index_path]


def run_verify(max_rank: int, fmt: str = "text", stream=None) -> int:
    stream = sys.stdout if stream is None else stream
    report = VerificationReport()
    report.extend(golden_su2_su3(ActionKind.GAMMA))
    report.extend(full_sweep(max_rank))
    stream.write(report.to_json() + "\n" if fmt == "json" else report.to_text() + "\n")
    return EXIT_OK if report.overall else EXIT_FAIL


def _params(text: str) -> tuple[int, int]:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected p,q got {text!r}") from None
    return p, q


def _max_rank(text: str) -> int:
    k = int(text)
    if not 0 <= k <= MAX_SWEEP_RANK:
        raise argparse.ArgumentTypeError(f"max rank must be in 0..{MAX_SWEEP_RANK}")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqk",
        description="Module structure of K-theory of a compact Lie group with an involution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="report for one group, symmetric pair and action")
    c.add_argument("--family", required=True, choices=list("ABCDEFG"))
    c.add_argument("--rank", required=True, type=int)
    c.add_argument("--pair", required=True, help="Cartan label, e.g. AI, BDI, EII")
    c.add_argument("--pq", type=_params, default=None, metavar="P,Q", help="(p,q) for BDI")
    c.add_argument("--action", required=True, choices=["alpha", "gamma"])
    c.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="largest weight degree")
    c.add_argument("--format", choices=["json", "text"], default="json")
    c.add_argument("--order", choices=sorted(SUBSET_ORDERS), default=DEFAULT_ORDER)

    a = sub.add_parser("atlas", help="reports for every catalog pair up to a rank")
    a.add_argument("--bound", type=int, required=True, help="largest group rank")
    a.add_argument("--out", default=None, help=f"output directory (default ${OUT_DIR_ENV} or ./atlas)")
    a.add_argument("--grading-bound", type=int, default=DEFAULT_BOUND)

    v = sub.add_parser("verify", help="run the golden checks and the consistency sweep")
    v.add_argument("--max-rank", type=_max_rank, default=MAX_SWEEP_RANK)
    v.add_argument("--format", choices=["json", "text"], default="text")
    return parser


def _error(kind: str, exc: Exception) -> None:
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": str(exc)}}) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            req = ComputeRequest(
                args.family, args.rank, args.pair, args.action, args.pq, args.bound,
                args.format, args.order,
            )  # fmt: skip
            doc = run_compute(req)
            sys.stdout.write(dumps(doc) if args.format == "json" else render_text(doc))
            return EXIT_OK if doc["checks"]["status"] != "fail" else EXIT_FAIL
        if args.command == "atlas":
            out = args.out or os.environ.get(OUT_DIR_ENV) or "atlas"
            paths = run_atlas(args.bound, out, args.grading_bound)
            sys.stdout.write(f"wrote {len(paths)} files to {out}\n")
            return EXIT_OK
        return run_verify(args.max_rank, args.format)
    except InvalidInputError as exc:
        _error("invalid-input", exc)
        return EXIT_USAGE
    except (CapacityError, OverflowError) as exc:
        _error("capacity", exc)
        return EXIT_CAPACITY
