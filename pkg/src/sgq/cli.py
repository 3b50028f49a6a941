"""Command-line surface and catalog persistence.

One subcommand per library operation; all output is deterministic for
fixed inputs and seed. Exit status: 0 on success, 1 when a check or an
operational step fails (cap exceeded, data file problems, a failing
verification item), 2 on usage errors (unknown group token, parameter
out of range).

Catalog files are line-oriented JSON, one record per line with keys in
fixed order; `--csv` switches the export to RFC-4180 CSV with a header
row.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .catalog import (
    GroupDescriptor,
    Sporadic,
    canonicalize_descriptor,
    descriptor_text,
    enumerate_catalog,
    order_of_descriptor,
    parse_group,
    sporadic_quant_record,
)
from .census import DEFAULT_CAP, MAX_CAP, census_of, derive_invariants
from .conjectures import (
    PROVENANCE_ABSENT,
    PROVENANCE_CENSUS,
    PROVENANCE_CLOSED_FORM,
    CollisionReport,
    confirm_moreto_collision,
    equal_order_pairs,
    moreto_signature,
    npe_collision_search,
    spectrum_collision_search,
    verify_paper_report,
)
from .errors import DataFileError, UnknownGroupError
from .factored import FactoredInteger
from .primegraph import graph_from_census
from .realize.realization import realization_for
from .sampling import estimate_order_fraction

_CATALOG_KEYS = (
    "descriptor",
    "order",
    "order_decimal",
    "largest_prime",
    "count_p",
    "count_provenance",
    "pi_e",
    "npe",
)


@dataclass(frozen=True)
class CatalogRecord:
    """One catalog row: invariants of a single simple group."""

    descriptor: str
    order: str
    order_decimal: str
    largest_prime: int
    count_p: str | None
    count_provenance: str
    pi_e: tuple[int, ...] | None
    npe: tuple[int, ...] | None

    def __post_init__(self) -> None:
        if str(FactoredInteger.parse(self.order).value) != self.order_decimal:
            raise DataFileError(
                f"{self.descriptor}: factored order {self.order} does not "
                f"render to {self.order_decimal}"
            )

    def to_json(self) -> str:
        payload = {
            "descriptor": self.descriptor,
            "order": self.order,
            "order_decimal": self.order_decimal,
            "largest_prime": self.largest_prime,
            "count_p": self.count_p,
            "count_provenance": self.count_provenance,
            "pi_e": list(self.pi_e) if self.pi_e is not None else None,
            "npe": list(self.npe) if self.npe is not None else None,
        }
        return json.dumps(payload)


def catalog_record(
    descriptor: GroupDescriptor, cap: int = DEFAULT_CAP, threads: int = 1
) -> CatalogRecord:
    """Build one record, enumerating the group when it fits under the cap.

    The largest-prime count keeps the bundled provenance when a bundled
    record exists (and is cross-checked against the census when both are
    available); the spectrum and npe fields are filled only from a
    census.
    """
    descriptor = canonicalize_descriptor(descriptor)
    order = order_of_descriptor(descriptor)
    p = order.largest_prime()

    census = None
    if order.value <= cap:
        try:
            census = census_of(descriptor, cap=cap, threads=threads)
        except UnknownGroupError:
            census = None

    signature = moreto_signature(descriptor, cap=cap, threads=threads)
    count_p = signature.count_p
    provenance = signature.count_provenance
    if census is not None:
        census_count = census.count(p)
        if count_p is None or provenance in (PROVENANCE_CENSUS, PROVENANCE_ABSENT):
            count_p = FactoredInteger.from_int(census_count)
            provenance = PROVENANCE_CENSUS
        elif count_p.value != census_count:
            raise DataFileError(
                f"{descriptor_text(descriptor)}: bundled count {count_p} "
                f"disagrees with census count {census_count}"
            )

    pi_e = tuple(census.element_orders()) if census is not None else None
    npe = (
        tuple(sorted(derive_invariants(census).npe)) if census is not None else None
    )
    return CatalogRecord(
        descriptor=descriptor_text(descriptor),
        order=str(order),
        order_decimal=str(order.value),
        largest_prime=p,
        count_p=str(count_p) if count_p is not None else None,
        count_provenance=provenance,
        pi_e=pi_e,
        npe=npe,
    )


def write_catalog(records: list[CatalogRecord], path: str | Path) -> None:
    """Line-oriented JSON, one record per line, fixed key order."""
    text = "".join(record.to_json() + "\n" for record in records)
    Path(path).write_text(text, encoding="utf-8")


def read_catalog(path: str | Path) -> list[CatalogRecord]:
    """Inverse of write_catalog; malformed lines name their line number."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"cannot read catalog {path}: {exc}") from exc
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataFileError(f"{path}:{lineno}: malformed JSON: {exc}") from exc
        if not isinstance(payload, dict) or set(payload) != set(_CATALOG_KEYS):
            raise DataFileError(
                f"{path}:{lineno}: expected keys {', '.join(_CATALOG_KEYS)}"
            )
        try:
            records.append(
                CatalogRecord(
                    descriptor=payload["descriptor"],
                    order=payload["order"],
                    order_decimal=payload["order_decimal"],
                    largest_prime=int(payload["largest_prime"]),
                    count_p=payload["count_p"],
                    count_provenance=payload["count_provenance"],
                    pi_e=tuple(payload["pi_e"]) if payload["pi_e"] is not None else None,
                    npe=tuple(payload["npe"]) if payload["npe"] is not None else None,
                )
            )
        except (TypeError, ValueError) as exc:
            raise DataFileError(f"{path}:{lineno}: bad record: {exc}") from exc
    return records


def _write_catalog_csv(records: list[CatalogRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(_CATALOG_KEYS)
        for r in records:
            writer.writerow(
                [
                    r.descriptor,
                    r.order,
                    r.order_decimal,
                    r.largest_prime,
                    r.count_p or "",
                    r.count_provenance,
                    " ".join(map(str, r.pi_e)) if r.pi_e is not None else "",
                    " ".join(map(str, r.npe)) if r.npe is not None else "",
                ]
            )


def _render_collision(report: CollisionReport, out: io.TextIOBase) -> None:
    left, right = report.pair_text
    out.write(f"collision {left} {right} verdict {report.verdict}\n")
    for e in report.invariants:
        marker = "equal" if e.equal else "UNEQUAL"
        detail = f" ({e.detail})" if e.detail else ""
        out.write(f"  {e.invariant}: {e.left} vs {e.right} [{e.kind}] {marker}{detail}\n")


def _collision_csv(reports: list[CollisionReport], out: io.TextIOBase) -> None:
    writer = csv.writer(out)
    writer.writerow(
        ["left", "right", "verdict", "invariant", "left_value", "right_value",
         "equal", "kind", "detail"]
    )
    for report in reports:
        left, right = report.pair_text
        for e in report.invariants:
            writer.writerow(
                [left, right, report.verdict, e.invariant, e.left, e.right,
                 str(e.equal).lower(), e.kind, e.detail]
            )


def _cmd_order(args) -> int:
    order = order_of_descriptor(parse_group(args.group))
    print(f"{order} = {order.value}")
    return 0


def _cmd_census(args) -> int:
    census = census_of(parse_group(args.group), cap=args.cap, threads=args.threads)
    for k in census.element_orders():
        print(f"{k} {census.count(k)}")
    return 0


def _cmd_invariants(args) -> int:
    descriptor = canonicalize_descriptor(parse_group(args.group))
    census = census_of(descriptor, cap=args.cap, threads=args.threads)
    record = derive_invariants(census)
    order = census.group_order
    print(f"group {descriptor_text(descriptor)}")
    print(f"order {order} = {order.value}")
    print("spectrum " + " ".join(map(str, census.element_orders())))
    print("npe " + " ".join(map(str, sorted(record.npe))))
    print("npe-multiset " + " ".join(map(str, record.npe_multiset)))
    p = order.largest_prime()
    print(f"largest-prime {p}")
    print(f"count({p}) {census.count(p)}")
    return 0


def _cmd_prime_graph(args) -> int:
    descriptor = canonicalize_descriptor(parse_group(args.group))
    census = census_of(descriptor, cap=args.cap, threads=args.threads)
    graph = graph_from_census(census)
    print("vertices " + " ".join(map(str, graph.vertices)))
    for a, b in sorted(graph.edges):
        print(f"edge {a} {b}")
    for comp in graph.components:
        print("component " + " ".join(map(str, sorted(comp))))
    if args.dot:
        Path(args.dot).write_text(graph.to_dot(), encoding="utf-8")
        print(f"dot -> {args.dot}")
    return 0


def _cmd_catalog(args) -> int:
    members = enumerate_catalog(args.max_order)
    records = [
        catalog_record(m.descriptor, cap=args.cap, threads=args.threads)
        for m in members
    ]
    if args.csv:
        _write_catalog_csv(records, args.out)
    else:
        write_catalog(records, args.out)
    print(f"{len(records)} records -> {args.out}")
    return 0


def _cmd_collide(args) -> int:
    members = [m.descriptor for m in enumerate_catalog(args.max_order)]
    if args.invariant == "moreto":
        reports = [
            confirm_moreto_collision(
                pair, cap=args.cap, samples=args.samples, seed=args.seed,
                threads=args.threads,
            )
            for pair in equal_order_pairs(members)
        ]
    elif args.invariant == "shi":
        reports = spectrum_collision_search(members, cap=args.cap, threads=args.threads)
    else:
        reports = npe_collision_search(members, cap=args.cap, threads=args.threads)
    if args.csv:
        _collision_csv(reports, sys.stdout)
        return 0
    if not reports:
        print(f"no {args.invariant} collisions up to order {args.max_order}")
        return 0
    for report in reports:
        _render_collision(report, sys.stdout)
    confirmed = sum(1 for r in reports if r.verdict == "confirmed")
    print(f"{len(reports)} candidate pair(s), {confirmed} confirmed")
    return 0


def _cmd_sample(args) -> int:
    realization = realization_for(parse_group(args.group))
    estimate = estimate_order_fraction(
        realization, args.order, args.samples, args.seed, threads=args.threads
    )
    print(f"group {estimate.label}")
    print(f"order-k {estimate.order_k}")
    print(f"samples {estimate.samples}")
    print(f"hits {estimate.hits}")
    print(f"fraction {estimate.fraction:.6f}")
    print(f"standard-error {estimate.standard_error:.6f}")
    print(f"seed {estimate.seed}")
    print(f"threads {estimate.threads}")
    return 0


def _cmd_verify_paper(args) -> int:
    report = verify_paper_report(cap=args.cap, threads=args.threads)
    sys.stdout.write(report.to_table())
    if args.jsonl:
        Path(args.jsonl).write_text(report.to_jsonl(), encoding="utf-8")
        print(f"jsonl -> {args.jsonl}")
    if report.passed:
        print(f"all {len(report.items)} checks passed")
        return 0
    for item in report.failures():
        print(f"FAILED {item.name}: {item.computed_value}")
    return 1


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker threads (enumeration results never depend on this)",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_CAP,
        help=f"census element cap, at most {MAX_CAP}",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgq",
        description="quantitative invariants of finite simple groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="factored and decimal group order")
    p.add_argument("group", help='group token, e.g. "A8", "L3(4)", "M11"')
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("census", help="exact element-order counts")
    p.add_argument("group")
    _add_common(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("invariants", help="order, spectrum, npe, largest-prime count")
    p.add_argument("group")
    _add_common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("prime-graph", help="prime graph vertices, edges, components")
    p.add_argument("group")
    p.add_argument("--dot", help="also write a GraphViz file here")
    _add_common(p)
    p.set_defaults(func=_cmd_prime_graph)

    p = sub.add_parser("catalog", help="export catalog records up to an order bound")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv", action="store_true", help="write CSV instead of JSON lines")
    _add_common(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("collide", help="search equal-order pairs sharing an invariant")
    p.add_argument("--invariant", choices=("moreto", "shi", "npe"), required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--samples", type=int, default=10**6,
                   help="Monte Carlo samples per side when counts are not exact")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--csv", action="store_true", help="print CSV instead of text")
    _add_common(p)
    p.set_defaults(func=_cmd_collide)

    p = sub.add_parser("sample", help="Monte Carlo fraction of elements of one order")
    p.add_argument("group")
    p.add_argument("--order", type=int, required=True, dest="order")
    p.add_argument("--samples", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="sampling streams; fix this for cross-machine reproducibility",
    )
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("verify-paper", help="re-derive and check every bundled constant")
    p.add_argument("--jsonl", help="also write the line-oriented JSON report here")
    _add_common(p)
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
