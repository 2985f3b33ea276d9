"""Persistent catalog of best-known (delta, t)-broadcast witnesses.

One JSON object per line with the fields ``delta, time, order, group,
generators, scheme, rounds, note, checksum``. Everything needed to replay a
record is text, so a catalog can be checked without trusting the code that
wrote it. Writes go through a lock file and a temp-file rename.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from filelock import FileLock

from .bounds import moore_bound
from .broadcast import BroadcastScheme, SchemeError, parse_scheme, simulate, validate_trace
from .cayley import build_cayley
from .groups import (
    Element,
    GroupError,
    GroupSpec,
    GroupSpecError,
    parse_elements,
    parse_group_spec,
    validate_generators,
)

__all__ = [
    "CatalogError",
    "RecordRejected",
    "CatalogRecord",
    "RecordReport",
    "CatalogReport",
    "load_catalog",
    "save_catalog",
    "verify_record",
    "catalog_verify",
    "catalog_update",
    "render_catalog",
    "record_from_witness",
    "seed_catalog",
]

FIELDS = ("delta", "time", "order", "group", "generators", "scheme", "rounds", "note", "checksum")


class CatalogError(ValueError):
    """Malformed catalog file."""


class RecordRejected(ValueError):
    """A record failed verification or claims an impossible order."""


@dataclass(frozen=True)
class CatalogRecord:
    delta: int
    time: int
    order: int
    group: str
    generators: str
    scheme: str
    rounds: int
    note: str = ""
    checksum: str = ""

    @classmethod
    def make(cls, delta: int, t: int, order: int, group: GroupSpec, generators: Sequence[Element],
             scheme: BroadcastScheme, rounds: int, note: str = "") -> "CatalogRecord":
        rec = cls(
            delta, t, order, group.text,
            ",".join(group.format(s) for s in generators),
            scheme.text(group), rounds, note,
        )
        return rec.sealed()

    def content_checksum(self) -> str:
        payload = json.dumps([getattr(self, f) for f in FIELDS[:-1]], separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def sealed(self) -> "CatalogRecord":
        return CatalogRecord(*(getattr(self, f) for f in FIELDS[:-1]), checksum=self.content_checksum())

    @property
    def optimal(self) -> bool:
        return self.order == moore_bound(self.delta, self.time)

    def to_json(self) -> str:
        return json.dumps({f: getattr(self, f) for f in FIELDS}, separators=(", ", ": "))

    @classmethod
    def from_json(cls, line: str) -> "CatalogRecord":
        data = json.loads(line)
        if not isinstance(data, dict):
            raise CatalogError("record is not a JSON object")
        missing = [f for f in FIELDS if f not in data]
        if missing:
            raise CatalogError(f"record lacks fields {missing}")
        for f in ("delta", "time", "order", "rounds"):
            if not isinstance(data[f], int):
                raise CatalogError(f"field {f!r} must be an integer")
        return cls(**{f: data[f] for f in FIELDS})


def load_catalog(path: str | os.PathLike) -> list[CatalogRecord]:
    path = Path(path)
    if not path.exists():
        return []
    out = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(CatalogRecord.from_json(line))
        except (json.JSONDecodeError, TypeError, CatalogError) as exc:
            raise CatalogError(f"{path}:{lineno}: {exc}") from None
    return out


def save_catalog(path: str | os.PathLike, records: Iterable[CatalogRecord]) -> None:
    path = Path(path)
    records = sorted(records, key=lambda r: (r.delta, r.time))
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            for r in records:
                fh.write(r.to_json() + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@dataclass(frozen=True)
class RecordReport:
    record: CatalogRecord
    problems: tuple[str, ...]
    completion_round: int | None = None

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_record(rec: CatalogRecord) -> RecordReport:
    """Replay a record end to end: parse, rebuild, simulate from the identity."""
    problems: list[str] = []
    if rec.checksum != rec.content_checksum():
        problems.append("checksum mismatch")
    if rec.delta < 1 or rec.time < 1:
        return RecordReport(rec, tuple(problems + ["delta and time must be >= 1"]))
    m = moore_bound(rec.delta, rec.time)
    if rec.order > m:
        return RecordReport(rec, tuple(problems + [f"order {rec.order} exceeds M({rec.delta},{rec.time})={m}"]))
    try:
        group = parse_group_spec(rec.group)
    except GroupSpecError as exc:
        return RecordReport(rec, tuple(problems + [f"bad group: {exc}"]))
    try:
        gens = parse_elements(group, rec.generators)
    except GroupError as exc:
        msg = str(exc)
        if not msg.startswith("generator not in group"):
            msg = f"generator not in group: {msg}"
        return RecordReport(rec, tuple(problems + [msg]))
    report = validate_generators(group, gens)
    if not report.valid:
        return RecordReport(rec, tuple(problems + report.problems()))
    if group.order != rec.order:
        problems.append(f"group has order {group.order}, record says {rec.order}")
    if len(gens) > rec.delta:
        problems.append(f"degree {len(gens)} exceeds delta {rec.delta}")
    try:
        scheme = parse_scheme(rec.scheme, group)
        cg = build_cayley(group, gens)
        trace = simulate(cg, scheme, max_rounds=max(rec.time, rec.rounds) + 1)
    except (SchemeError, GroupError) as exc:
        return RecordReport(rec, tuple(problems + [f"bad scheme: {exc}"]))
    tr = validate_trace(cg.graph, trace)
    if not tr.valid:
        problems.append(f"invalid trace: {tr.first}")
    got = trace.completion_round
    if got is None or got > rec.time:
        problems.append(f"completion exceeds t: {got if got is not None else 'never'} > {rec.time}")
    elif got != rec.rounds:
        problems.append(f"completes in {got}, record says {rec.rounds}")
    return RecordReport(rec, tuple(problems), got)


@dataclass(frozen=True)
class CatalogReport:
    reports: tuple[RecordReport, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def lines(self) -> list[str]:
        out = []
        for r in self.reports:
            rec = r.record
            tag = "PASS" if r.ok else "FAIL"
            reason = "" if r.ok else ": " + "; ".join(r.problems)
            out.append(f"{tag} ({rec.delta},{rec.time}) order {rec.order} {rec.group}{reason}")
        return out


def catalog_verify(path: str | os.PathLike) -> CatalogReport:
    records = load_catalog(path)
    seen = set()
    reports = []
    for rec in records:
        rep = verify_record(rec)
        key = (rec.delta, rec.time)
        if key in seen:
            rep = RecordReport(rec, rep.problems + (f"second record for {key}",), rep.completion_round)
        seen.add(key)
        reports.append(rep)
    return CatalogReport(tuple(reports))


def catalog_update(path: str | os.PathLike, rec: CatalogRecord) -> bool:
    """Insert ``rec`` if it beats the stored order at its (delta, t).

    Returns whether it was inserted. Raises :class:`RecordRejected` when the
    record does not replay or claims more than the Moore-type bound.
    """
    path = Path(path)
    if not rec.checksum:
        rec = rec.sealed()
    report = verify_record(rec)
    if not report.ok:
        raise RecordRejected("; ".join(report.problems))
    with FileLock(str(path) + ".lock"):
        records = load_catalog(path)
        for i, old in enumerate(records):
            if (old.delta, old.time) == (rec.delta, rec.time):
                if rec.order <= old.order:
                    return False
                records[i] = rec
                break
        else:
            records.append(rec)
        save_catalog(path, records)
    return True


def render_catalog(records: Sequence[CatalogRecord], fmt: str = "pretty") -> str:
    """``pretty``: delta x t grid with optimal orders in **bold**;
    ``tsv`` / ``json-lines``: one row per record."""
    if fmt == "json-lines":
        return "\n".join(r.to_json() for r in records)
    if fmt == "tsv":
        rows = ["delta\ttime\torder\toptimal\tgroup\tgenerators\tscheme"]
        for r in sorted(records, key=lambda r: (r.delta, r.time)):
            rows.append(f"{r.delta}\t{r.time}\t{r.order}\t{int(r.optimal)}\t{r.group}\t{r.generators}\t{r.scheme}")
        return "\n".join(rows)
    if fmt != "pretty":
        raise ValueError(f"unknown format {fmt!r}")
    if not records:
        return "(empty catalog)"
    cells = {(r.delta, r.time): r for r in records}
    deltas = sorted({d for d, _ in cells})
    times = sorted({t for _, t in cells})
    grid = [["D\\t"] + [str(t) for t in times]]
    for d in deltas:
        row = [str(d)]
        for t in times:
            r = cells.get((d, t))
            row.append("" if r is None else (f"**{r.order}**" if r.optimal else str(r.order)))
        grid.append(row)
    width = max(len(c) for row in grid for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row).rstrip() for row in grid)


def record_from_witness(w) -> CatalogRecord:
    """Catalog record for a :class:`~broadcastnet.families.FamilyWitness`."""
    return CatalogRecord.make(w.delta, w.t, w.expected_order, w.group, w.generators, w.scheme,
                              w.expected_round, w.note)


def seed_catalog(path: str | os.PathLike, max_delta: int = 8, max_time: int = 10) -> list[tuple[CatalogRecord, bool]]:
    """Insert the closed-form families, then close under the K_2 product.

    Seeds: hypercubes Q_1..Q_max_delta, the dihedral family for
    delta = 2..max_delta (when delta + 1 <= max_time), and the even cycles of
    the delta = 2 row. Returns (record, inserted) for everything offered.
    """
    from .families import cycle_family, dihedral_family, hypercube_family, product_witness

    witnesses = [hypercube_family(d) for d in range(1, max_delta + 1) if d <= max_time]
    witnesses += [dihedral_family(d) for d in range(2, max_delta + 1) if d + 1 <= max_time]
    witnesses += [cycle_family(t) for t in range(2, max_time + 1)]
    out = []
    best: dict[tuple[int, int], object] = {}
    for w in witnesses:
        ok = catalog_update(path, record_from_witness(w))
        out.append((record_from_witness(w), ok))
        key = (w.delta, w.t)
        if key not in best or w.expected_order > best[key].expected_order:
            best[key] = w
    # close under G -> G x K_2, walking cells in (delta, t) order
    for delta in range(1, max_delta):
        for t in range(1, max_time):
            w = best.get((delta, t))
            if w is None:
                continue
            lifted = product_witness(w)
            key = (lifted.delta, lifted.t)
            if key in best and best[key].expected_order >= lifted.expected_order:
                continue
            rec = record_from_witness(lifted)
            ok = catalog_update(path, rec)
            out.append((rec, ok))
            if ok:
                best[key] = lifted
    return out
