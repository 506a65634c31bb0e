"""Output formatting for CLI records: text, JSON lines, or CSV."""

import csv
import io
import json
import logging
from collections.abc import Iterable, Iterator, Mapping
from enum import Enum
from typing import Any

from avoid321.components.permutation import DescentSet, Permutation
from avoid321.components.polynomial import LaurentPoly, canonical_string
from avoid321.models.results import CheckReport

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class OutputFormatter:
    """Renders rows of statistics, polynomials and check reports.

    Cells are converted per format:
    - DescentSet: ``{1,4}`` as text, ``[1, 4]`` in JSON, ``1;4`` in CSV
    - Permutation: one-line notation as text/CSV, an array in JSON
    - LaurentPoly: canonical string, or the term list in JSON
    """

    def __init__(self, fmt: OutputFormat | str = OutputFormat.TEXT, include_timing: bool = True):
        self.fmt = OutputFormat(fmt)
        self.include_timing = include_timing
        logger.debug(f"OutputFormatter initialized: format={self.fmt.value}")

    # ------------------------------------------------------------------
    # Cells
    # ------------------------------------------------------------------

    def _cell(self, value: Any) -> Any:
        if isinstance(value, DescentSet):
            if self.fmt is OutputFormat.JSON:
                return list(value.indices)
            if self.fmt is OutputFormat.CSV:
                return ";".join(str(i) for i in value.indices)
            return str(value)
        if isinstance(value, Permutation):
            return value.to_json() if self.fmt is OutputFormat.JSON else str(value)
        if isinstance(value, LaurentPoly):
            return value.to_json() if self.fmt is OutputFormat.JSON else canonical_string(value)
        return value

    def _csv(self, header: list[str], rows: Iterable[list[Any]]) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------

    def stream_records(
        self, rows: Iterable[Mapping[str, Any]], columns: list[str]
    ) -> Iterator[str]:
        """Yield output lines one row at a time (CSV starts with its header)."""
        if self.fmt is OutputFormat.CSV:
            yield self._csv(columns, [])
        for row in rows:
            cells = [self._cell(row[c]) for c in columns]
            if self.fmt is OutputFormat.CSV:
                buf = io.StringIO()
                csv.writer(buf, lineterminator="\n").writerow(cells)
                yield buf.getvalue()
            elif self.fmt is OutputFormat.JSON:
                yield json.dumps(dict(zip(columns, cells))) + "\n"
            else:
                yield "\t".join(str(cell) for cell in cells) + "\n"

    def polynomial(self, poly: LaurentPoly, **meta: Any) -> str:
        """A single polynomial; CSV lists one term per row."""
        if self.fmt is OutputFormat.JSON:
            return json.dumps({**meta, "poly": canonical_string(poly), **poly.to_json()}) + "\n"
        if self.fmt is OutputFormat.CSV:
            names = [v.name for v in poly.variables]
            rows = [
                [c] + [m.exponent(v) for v in poly.variables] for m, c in poly.sorted_terms()
            ]
            return self._csv(["coeff", *names], rows)
        return canonical_string(poly) + "\n"

    def reports(self, reports: Iterable[CheckReport]) -> str:
        records = [r.to_json(self.include_timing) for r in reports]
        if self.fmt is OutputFormat.JSON:
            return "".join(json.dumps(record) + "\n" for record in records)
        header = ["check", "n_min", "n_max", "status", "witness"]
        if self.include_timing:
            header.append("ms")
        rows = []
        for record in records:
            witness = json.dumps(record["witness"]) if record["witness"] is not None else ""
            row = [record["check"], *record["n"], record["status"], witness]
            if self.include_timing:
                row.append(record["ms"])
            rows.append(row)
        if self.fmt is OutputFormat.CSV:
            return self._csv(header, rows)
        return "".join("\t".join(str(cell) for cell in row) + "\n" for row in rows)
