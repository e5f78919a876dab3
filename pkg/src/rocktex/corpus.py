"""Corpus ingestion and serialized artifacts: archives, CSV and JSON.

A corpus on disk is one directory per class, each holding PNG or binary
PPM images (8-bit, 3-channel).  Classes are ordered lexicographically by
directory name — that ordering defines class indices — and files are
ordered by name within a class, so every derived artifact is
deterministic.

Descriptor archives are line-delimited JSON with a ``schema_version``
field per record.  Floats are serialized with Python's shortest
round-trip ``repr``, which parses back to the identical double, so
re-running a deterministic extraction yields a byte-identical file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .descriptors import DescriptorRecord, Method
from .evaluation import LabeledCorpus
from .image import ColorImage, ColorSpace

ARCHIVE_SCHEMA_VERSION = 1
METRICS_SCHEMA_VERSION = 1
IMAGE_SUFFIXES = (".png", ".ppm")


@dataclass(frozen=True)
class CorpusManifest:
    """Deterministically ordered (class name, image paths) listing."""

    root: Path
    entries: tuple  # of (class name, tuple of Path)

    @property
    def class_names(self) -> tuple:
        return tuple(name for name, _ in self.entries)

    @property
    def n_images(self) -> int:
        return sum(len(paths) for _, paths in self.entries)

    def iter_images(self):
        """Yield (class index, class name, path) over all images in order."""
        for index, (name, paths) in enumerate(self.entries):
            for path in paths:
                yield index, name, path


def load_image(path) -> ColorImage:
    """Decode one image file to an RGB ColorImage, or raise naming the file."""
    path = Path(path)
    try:
        with Image.open(path) as img:
            if img.mode != "RGB":
                raise ValueError(
                    f"{path}: mode {img.mode!r}, need 8-bit 3-channel RGB"
                )
            pixels = np.asarray(img, dtype=np.uint8)
    except (UnidentifiedImageError, OSError) as exc:
        raise ValueError(f"{path}: cannot decode image ({exc})") from exc
    try:
        return ColorImage(pixels, ColorSpace.RGB)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def ingest(root) -> CorpusManifest:
    """Scan a corpus directory into a manifest, validating every image.

    Requires at least 2 class subdirectories and at least 2 decodable
    images per class.
    """
    root = Path(root)
    if not root.is_dir():
        raise ValueError(f"corpus root {root} is not a directory")
    entries = []
    for class_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        paths = sorted(
            p for p in class_dir.iterdir()
            if p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES
        )
        for p in paths:
            _check_decodable(p)
        if len(paths) < 2:
            raise ValueError(
                f"class directory {class_dir} has {len(paths)} usable images, need >= 2"
            )
        entries.append((class_dir.name, tuple(paths)))
    if len(entries) < 2:
        raise ValueError(f"corpus root {root} has {len(entries)} class directories, need >= 2")
    return CorpusManifest(root=root, entries=tuple(entries))


def _check_decodable(path: Path):
    """Cheap header-level validation; full decode happens at load time."""
    try:
        with Image.open(path) as img:
            mode = img.mode
    except (UnidentifiedImageError, OSError) as exc:
        raise ValueError(f"{path}: cannot decode image ({exc})") from exc
    if mode != "RGB":
        raise ValueError(f"{path}: mode {mode!r}, need 8-bit 3-channel RGB")


# ---------------------------------------------------------------------------
# Descriptor archives (JSON lines)

@dataclass(frozen=True)
class ArchiveEntry:
    """One serialized descriptor: source file, class label, record."""

    file: str
    class_name: str
    record: DescriptorRecord


def write_archive(path, entries) -> None:
    path = Path(path)
    lines = []
    for entry in entries:
        payload = {
            "schema_version": ARCHIVE_SCHEMA_VERSION,
            "file": entry.file,
            "class": entry.class_name,
            "method": entry.record.method.value,
            "params": entry.record.params,
            "vector": [float(v) for v in entry.record.vector],
        }
        lines.append(json.dumps(payload, sort_keys=True))
    path.write_text("\n".join(lines) + "\n")


def read_archive(path) -> list:
    path = Path(path)
    entries = []
    for line_no, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        payload = json.loads(line)
        version = payload.get("schema_version")
        if version != ARCHIVE_SCHEMA_VERSION:
            raise ValueError(
                f"{path}:{line_no}: archive schema {version!r}, "
                f"reader supports {ARCHIVE_SCHEMA_VERSION}"
            )
        record = DescriptorRecord(
            Method(payload["method"]),
            payload["params"],
            np.array(payload["vector"], dtype=np.float64),
        )
        entries.append(ArchiveEntry(payload["file"], payload["class"], record))
    if not entries:
        raise ValueError(f"{path}: empty archive")
    return entries


def to_corpus(entries) -> LabeledCorpus:
    """Regroup archive entries into a labeled corpus (classes sorted by name)."""
    classes = tuple(sorted({e.class_name for e in entries}))
    index = {name: i for i, name in enumerate(classes)}
    items = tuple((index[e.class_name], e.record) for e in entries)
    return LabeledCorpus(classes=classes, items=items)


# ---------------------------------------------------------------------------
# CSV / JSON artifacts

def write_matrix_csv(path, matrix, row_labels, col_labels) -> None:
    """Labeled-matrix CSV: header row of column labels, one label per row."""
    matrix = np.asarray(matrix)
    if matrix.shape != (len(row_labels), len(col_labels)):
        raise ValueError(
            f"matrix shape {matrix.shape} does not match "
            f"{len(row_labels)} x {len(col_labels)} labels"
        )
    lines = ["," + ",".join(_csv_cell(c) for c in col_labels)]
    for label, row in zip(row_labels, matrix):
        lines.append(",".join([_csv_cell(label)] + [_format_number(v) for v in row]))
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix_csv(path):
    """Inverse of :func:`write_matrix_csv` -> (matrix, row_labels, col_labels)."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty matrix file")
    col_labels = lines[0].split(",")[1:]
    row_labels = []
    rows = []
    for line in lines[1:]:
        if not line:
            continue
        cells = line.split(",")
        row_labels.append(cells[0])
        rows.append([float(c) for c in cells[1:]])
    matrix = np.array(rows, dtype=np.float64)
    if matrix.shape != (len(row_labels), len(col_labels)):
        raise ValueError(f"{path}: ragged matrix")
    if matrix.size and np.all(matrix == np.rint(matrix)):
        matrix = matrix.astype(np.int64)
    return matrix, row_labels, col_labels


def _csv_cell(value) -> str:
    text = str(value)
    if "," in text or "\n" in text or '"' in text:
        raise ValueError(f"label {text!r} needs quoting, which this format avoids")
    return text


def _format_number(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def write_metrics_json(path, payload: dict) -> None:
    payload = {"schema_version": METRICS_SCHEMA_VERSION, **payload}
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def read_metrics_json(path) -> dict:
    payload = json.loads(Path(path).read_text())
    version = payload.get("schema_version")
    if version != METRICS_SCHEMA_VERSION:
        raise ValueError(
            f"{path}: metrics schema {version!r}, reader supports {METRICS_SCHEMA_VERSION}"
        )
    return payload
