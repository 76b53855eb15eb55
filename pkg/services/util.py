"""Parsing of command-line inputs and formatting of results."""

import csv
import io
import json
import logging
from collections.abc import Iterator, Sequence
from pathlib import Path

import click
import numpy as np

from models import (
    CountingFunctionSpec,
    OrthonormalSet,
    RunManifest,
    SubspacePartition,
)
from services.exceptions import ConstructionError, ParseError

logger = logging.getLogger(__name__)

Row = dict[str, object]


def _numbered_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield (line number, fields) for each data line of a CSV text.

    Blank lines and lines starting with ``#`` are skipped. A first line
    without any numeric field is taken as a header.
    """
    reader = csv.reader(io.StringIO(text))
    first = True
    for fields in reader:
        line_number = reader.line_num
        cells = [cell.strip() for cell in fields]
        if not any(cells) or cells[0].startswith("#"):
            continue
        if first:
            first = False
            if not any(_is_number(cell) for cell in cells):
                continue
        yield line_number, cells


def _is_number(cell: str) -> bool:
    try:
        complex(cell.replace(" ", ""))
    except ValueError:
        return False
    return True


def _real(cell: str, line_number: int | None) -> float:
    try:
        value = float(cell)
    except ValueError as exc:
        msg = f"{cell!r} is not a real number"
        raise ParseError(msg, line_number) from exc
    return value


def _complex(cell: object, line_number: int | None) -> complex:
    if isinstance(cell, list | tuple):
        if len(cell) != 2:
            msg = f"amplitude pair needs [re, im], got {cell!r}"
            raise ParseError(msg, line_number)
        re, im = (_real(str(part), line_number) for part in cell)
        return complex(re, im)
    token = str(cell).replace(" ", "")
    try:
        return complex(token)
    except ValueError as exc:
        msg = f"{cell!r} is not a complex amplitude (use re+imj)"
        raise ParseError(msg, line_number) from exc


def _json_rows(text: str) -> list:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        msg = f"invalid JSON: {exc.msg}"
        raise ParseError(msg, exc.lineno) from exc
    if not isinstance(data, list) or not data:
        msg = "JSON input must be a nonempty array"
        raise ParseError(msg, 1)
    return data


def _looks_like_json(text: str) -> bool:
    return text.lstrip().startswith("[")


def parse_weight_rows(text: str) -> list[tuple[int, list[float]]]:
    """Parse real vectors, one per CSV line or as a JSON array.

    A JSON array of numbers is a single vector; an array of arrays holds
    one vector per element, numbered from 1.
    """
    if _looks_like_json(text):
        data = _json_rows(text)
        if not isinstance(data[0], list):
            data = [data]
        rows = []
        for index, vector in enumerate(data, start=1):
            if not isinstance(vector, list) or not vector:
                msg = "each vector must be a nonempty array of numbers"
                raise ParseError(msg, index)
            rows.append((index, [_real(str(x), index) for x in vector]))
        return rows
    rows = [
        (line_number, [_real(cell, line_number) for cell in cells])
        for line_number, cells in _numbered_lines(text)
    ]
    if not rows:
        msg = "input holds no vectors"
        raise ParseError(msg)
    return rows


def parse_amplitude_rows(text: str) -> list[tuple[int, list[complex]]]:
    """Parse complex vectors, one per CSV line or as JSON.

    CSV tokens look like ``0.5+0.5j``. JSON vectors are arrays of
    ``[re, im]`` pairs; plain numbers are read as real amplitudes.
    """
    if _looks_like_json(text):
        data = _json_rows(text)
        # A single vector is an array of pairs or of numbers.
        first = data[0]
        single = not isinstance(first, list) or (
            len(first) == 2 and not any(isinstance(x, list) for x in first)
        )
        if single:
            data = [data]
        rows = []
        for index, vector in enumerate(data, start=1):
            if not isinstance(vector, list) or not vector:
                msg = "each state must be a nonempty array of amplitudes"
                raise ParseError(msg, index)
            rows.append((index, [_complex(x, index) for x in vector]))
        return rows
    rows = [
        (line_number, [_complex(cell, line_number) for cell in cells])
        for line_number, cells in _numbered_lines(text)
    ]
    if not rows:
        msg = "input holds no states"
        raise ParseError(msg)
    return rows


def parse_orthonormal_set(text: str, dimension: int) -> OrthonormalSet:
    """Read one vector per row into an orthonormal set."""
    if not text.strip():
        return OrthonormalSet([], dimension=dimension)
    rows = parse_amplitude_rows(text)
    try:
        return OrthonormalSet(
            [vector for _, vector in rows], dimension=dimension
        )
    except ConstructionError as exc:
        raise ParseError(str(exc), rows[0][0]) from exc


def parse_partition(text: str, dimension: int) -> SubspacePartition:
    """Read ``1,2|3,4`` style blocks of 1-based indices."""
    blocks = []
    for part in text.strip().split("|"):
        try:
            block = [int(token) - 1 for token in part.split(",") if token]
        except ValueError as exc:
            msg = f"partition block {part!r} must list integer indices"
            raise ParseError(msg, 1) from exc
        blocks.append(block)
    try:
        return SubspacePartition.from_blocks(dimension, blocks)
    except ConstructionError as exc:
        raise ParseError(str(exc), 1) from exc


def parse_tabulated(text: str) -> CountingFunctionSpec:
    """Read a tabulated counting function from ``w,value`` rows."""
    if _looks_like_json(text):
        knots = []
        for index, pair in enumerate(_json_rows(text), start=1):
            if not isinstance(pair, list) or len(pair) != 2:
                msg = f"expected a [w, value] pair, got {pair!r}"
                raise ParseError(msg, index)
            knots.append(tuple(_real(str(x), index) for x in pair))
    else:
        knots = []
        for line_number, cells in _numbered_lines(text):
            if len(cells) != 2:
                msg = f"expected 'w,value', got {len(cells)} fields"
                raise ParseError(msg, line_number)
            knots.append(tuple(_real(c, line_number) for c in cells))
    try:
        return CountingFunctionSpec.tabulated(knots)
    except ConstructionError as exc:
        raise ParseError(str(exc)) from exc


def parse_sizes(raw: str) -> list[int]:
    try:
        return [int(token) for token in raw.split(",") if token.strip()]
    except ValueError as exc:
        msg = f"sizes must be comma-separated integers, got {raw!r}"
        raise ParseError(msg) from exc


def format_value(value: object, digits: int = 12) -> object:
    """Round floats to ``digits`` significant digits; pass others through."""
    if isinstance(value, float | np.floating):
        return float(f"{float(value):.{digits}g}")
    return value


def _cell(value: object, digits: int) -> str:
    if isinstance(value, float | np.floating):
        return f"{float(value):.{digits}g}"
    if value is None:
        return ""
    return str(value)


def render_rows(
    rows: Sequence[Row],
    output_format: str,
    manifest: RunManifest,
    digits: int = 12,
) -> str:
    """Render result rows as CSV, as JSON with the manifest, or as a table."""
    columns = list(dict.fromkeys(key for row in rows for key in row))
    if output_format == "json":
        payload = {
            "manifest": manifest.to_dict(),
            "rows": [
                {key: format_value(v, digits) for key, v in row.items()}
                for row in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if output_format == "table":
        cells = [[_cell(row.get(c), digits) for c in columns] for row in rows]
        widths = [
            max([len(c), *(len(line[i]) for line in cells)])
            for i, c in enumerate(columns)
        ]
        lines = [
            "  ".join(c.ljust(w) for c, w in zip(columns, widths, strict=True))
        ]
        lines.extend(
            "  ".join(v.rjust(w) for v, w in zip(line, widths, strict=True))
            for line in cells
        )
        return "\n".join(lines) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c), digits) for c in columns])
    return buffer.getvalue()


def emit(
    rows: Sequence[Row],
    output_format: str,
    manifest: RunManifest,
    out: Path | None = None,
    digits: int = 12,
) -> None:
    """Write rendered rows to ``out`` or stdout.

    CSV and table files written to disk get a ``<out>.manifest.json``
    sidecar; JSON output embeds its manifest.
    """
    text = render_rows(rows, output_format, manifest, digits)
    if out is None:
        click.echo(text, nl=False)
        return
    out.write_text(text, encoding="utf-8")
    if output_format != "json":
        sidecar = out.with_name(out.name + ".manifest.json")
        sidecar.write_text(
            json.dumps(manifest.to_dict(), indent=2) + "\n", encoding="utf-8"
        )
    logger.info("Wrote %d rows to %s", len(rows), out)
