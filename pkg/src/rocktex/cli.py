"""Command-line interface.

Commands::

    rocktex synth OUTDIR --seed N [--classes K --per-class M --size S]
    rocktex ingest-check ROOT
    rocktex extract ROOT --method M [method flags] --out DIR
    rocktex compare ARCHIVE --metric {hi,chi2} --out DIR
    rocktex classify ARCHIVE --metric {hi,chi2} [--dump-histograms] --out DIR

``--out`` defaults to the ``ROCKTEX_OUT`` environment variable, then to
the current directory.  Exit status is 0 only when every per-image step
succeeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import corpus as corpus_io
from . import descriptors, evaluation, synth
from .corpus import ArchiveEntry
from .gabor import DEFAULT_F, DEFAULT_SIGMA
from .lbp import LbpConfig, LbpVariant
from .similarity import Metric, distance

_VARIANTS = {"basic": LbpVariant.BASIC,
             "ri": LbpVariant.ROTATION_INVARIANT,
             "riu2": LbpVariant.UNIFORM_ROTATION_INVARIANT}


def _default_out() -> str:
    return os.environ.get("ROCKTEX_OUT", ".")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rocktex",
        description="Color rock-texture descriptors and classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_synth = sub.add_parser("synth", help="generate a seeded synthetic corpus")
    p_synth.add_argument("outdir", type=Path)
    p_synth.add_argument("--seed", type=int, default=0)
    p_synth.add_argument("--classes", type=int, default=8)
    p_synth.add_argument("--per-class", type=int, default=5)
    p_synth.add_argument("--size", type=int, default=256)
    p_synth.add_argument("--noise", type=float, default=6.0)
    p_synth.add_argument("--format", choices=("png", "ppm"), default="png")

    p_ingest = sub.add_parser("ingest-check", help="validate a corpus directory")
    p_ingest.add_argument("root", type=Path)

    p_extract = sub.add_parser("extract", help="extract descriptors to an archive")
    p_extract.add_argument("root", type=Path)
    p_extract.add_argument("--method", required=True,
                           choices=[m.value for m in descriptors.Method])
    p_extract.add_argument("--lbp-variant", choices=sorted(_VARIANTS), default="basic")
    p_extract.add_argument("--p", type=int, default=8, help="LBP neighbor count")
    p_extract.add_argument("--r", type=float, default=1.0, help="LBP radius")
    p_extract.add_argument("--dct-k", type=int, default=descriptors.DEFAULT_DCT_K)
    p_extract.add_argument("--gabor-sigma", type=float, default=DEFAULT_SIGMA)
    p_extract.add_argument("--gabor-f", type=float, default=DEFAULT_F)
    p_extract.add_argument("--lambda", dest="lambdas", type=float, action="append",
                           help="Gabor wavelength, repeatable (default 4 and 8)")
    p_extract.add_argument("--theta", dest="thetas", type=float, action="append",
                           help="Gabor angle in degrees, repeatable "
                                "(default 0 45 90 135 180)")
    p_extract.add_argument("--full-bank", action="store_true",
                           help="all 40 Gabor bank cells instead of the angle grid")
    p_extract.add_argument("--out", type=Path, default=None)

    p_compare = sub.add_parser("compare", help="pairwise distances of an archive")
    p_compare.add_argument("archive", type=Path)
    p_compare.add_argument("--metric", choices=[m.value for m in Metric], default="hi")
    p_compare.add_argument("--out", type=Path, default=None)

    p_classify = sub.add_parser("classify", help="leave-one-out evaluation of an archive")
    p_classify.add_argument("archive", type=Path)
    p_classify.add_argument("--metric", choices=[m.value for m in Metric], default="hi")
    p_classify.add_argument("--aggregate", choices=("mean", "median"), default="mean")
    p_classify.add_argument("--dump-histograms", action="store_true")
    p_classify.add_argument("--out", type=Path, default=None)

    return parser


def _out_dir(args) -> Path:
    out = args.out if args.out is not None else Path(_default_out())
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_synth(args) -> int:
    spec = synth.SynthSpec(classes=args.classes, images_per_class=args.per_class,
                           size=args.size, noise=args.noise, format=args.format)
    written = synth.generate_corpus(args.outdir, args.seed, spec)
    print(f"wrote {len(written)} images to {args.outdir} "
          f"({spec.classes} classes x {spec.images_per_class})")
    return 0


def cmd_ingest_check(args) -> int:
    manifest = corpus_io.ingest(args.root)
    print(f"corpus {manifest.root}: {len(manifest.entries)} classes, "
          f"{manifest.n_images} images")
    for name, paths in manifest.entries:
        print(f"  {name}: {len(paths)} images")
    return 0


def _records_for_image(image, args, lbp_config, gabor_cells):
    method = descriptors.Method(args.method)
    if method is descriptors.Method.RGB_HIST:
        return [descriptors.rgb_hist(image)]
    if method is descriptors.Method.LBP:
        return [descriptors.lbp_descriptor(image, lbp_config)]
    if method is descriptors.Method.ALBPCSF:
        return [descriptors.albpcsf_descriptor(image, lbp_config)]
    if method is descriptors.Method.D_ALBPCSF:
        return [descriptors.d_albpcsf(image, args.dct_k, lbp_config)]
    return [descriptors.g_albpcsf(image, params, lbp_config, theta_deg=theta)
            for params, theta in gabor_cells]


def cmd_extract(args) -> int:
    manifest = corpus_io.ingest(args.root)
    lbp_config = LbpConfig(p=args.p, r=args.r, variant=_VARIANTS[args.lbp_variant])
    method = descriptors.Method(args.method)

    gabor_cells = None
    if method is descriptors.Method.G_ALBPCSF:
        if args.full_bank:
            from .gabor import ORIENTATIONS, SCALES, GaborParams
            gabor_cells = [
                (GaborParams(mu=mu, nu=nu, sigma=args.gabor_sigma, f=args.gabor_f),
                 mu * 22.5)
                for nu in range(SCALES) for mu in range(ORIENTATIONS)
            ]
        else:
            gabor_cells = descriptors.gabor_grid(
                lambdas=tuple(args.lambdas) if args.lambdas else (4.0, 8.0),
                thetas=tuple(args.thetas) if args.thetas else (0.0, 45.0, 90.0, 135.0, 180.0),
                sigma=args.gabor_sigma, f=args.gabor_f)

    entries = []
    failures = []
    for _index, name, path in manifest.iter_images():
        rel = path.relative_to(manifest.root).as_posix()
        try:
            image = corpus_io.load_image(path)
            for record in _records_for_image(image, args, lbp_config, gabor_cells):
                entries.append(ArchiveEntry(file=rel, class_name=name, record=record))
        except (ValueError, OSError) as exc:
            failures.append((rel, str(exc)))
            print(f"FAILED {rel}: {exc}", file=sys.stderr)

    out = _out_dir(args)
    archive_path = out / "descriptors.jsonl"
    if entries:
        corpus_io.write_archive(archive_path, entries)
    print(f"extracted {len(entries)} records from "
          f"{manifest.n_images - len(failures)}/{manifest.n_images} images "
          f"-> {archive_path}")
    if failures:
        print(f"{len(failures)} images failed:", file=sys.stderr)
        for rel, message in failures:
            print(f"  {rel}: {message}", file=sys.stderr)
        return 1
    return 0


def _require_homogeneous(entries):
    """All records must share one (method, params) signature."""
    signatures = {(e.record.method.value, tuple(sorted(e.record.params.items())))
                  for e in entries}
    if len(signatures) > 1:
        raise ValueError(
            f"archive mixes {len(signatures)} parameter signatures; "
            "extract with a single method/parameter set before comparing"
        )


def cmd_compare(args) -> int:
    entries = corpus_io.read_archive(args.archive)
    _require_homogeneous(entries)
    metric = Metric(args.metric)
    n = len(entries)
    vectors = [e.record.vector for e in entries]
    matrix = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d = distance(metric, vectors[i], vectors[j])
            matrix[i, j] = matrix[j, i] = d
    labels = [e.file for e in entries]

    out = _out_dir(args)
    matrix_path = out / "similarity_matrix.csv"
    corpus_io.write_matrix_csv(matrix_path, matrix, labels, labels)

    class_names = sorted({e.class_name for e in entries})
    rows = []
    for name in class_names:
        idx = [i for i, e in enumerate(entries) if e.class_name == name]
        if len(idx) > 1:
            pair_values = [matrix[i, j] for a, i in enumerate(idx) for j in idx[a + 1:]]
            mean_value = float(np.mean(pair_values))
        else:
            mean_value = None
        rows.append((name, len(idx), mean_value))
    table_path = out / "class_mean_distance.csv"
    lines = ["class,n_items,mean_intra_distance"]
    for name, count, mean_value in rows:
        cell = "" if mean_value is None else repr(mean_value)
        lines.append(f"{name},{count},{cell}")
    table_path.write_text("\n".join(lines) + "\n")

    print(f"compared {n} records ({metric.value}) -> {matrix_path}, {table_path}")
    return 0


def metrics_payload(cm, class_names, metric_name: str, aggregate: str) -> dict:
    """JSON-ready evaluation report for a confusion matrix."""
    tallies = evaluation.binary_tallies(cm)
    overall = evaluation.metrics(tallies)
    per_class = evaluation.per_class_report(cm, class_names)
    return {
        "metric": metric_name,
        "aggregate": aggregate,
        "classes": list(class_names),
        "tallies": {"vp": tallies.vp, "fp": tallies.fp,
                    "vn": tallies.vn, "fn": tallies.fn},
        "sensitivity": overall.sensitivity,
        "specificity": overall.specificity,
        "precision": overall.precision,
        "accuracy": overall.accuracy,
        "error_rate": overall.error_rate,
        "per_class": [
            {"name": row.name, "vp": row.vp, "fp": row.fp, "vn": row.vn, "fn": row.fn,
             "accuracy": row.accuracy,
             "positive_accuracy": row.positive_accuracy,
             "negative_accuracy": row.negative_accuracy}
            for row in per_class
        ],
    }


def cmd_classify(args) -> int:
    entries = corpus_io.read_archive(args.archive)
    _require_homogeneous(entries)
    metric = Metric(args.metric)
    labeled = corpus_io.to_corpus(entries)
    cm = evaluation.confusion(labeled, metric, aggregate=args.aggregate)

    out = _out_dir(args)
    confusion_path = out / "confusion.csv"
    corpus_io.write_matrix_csv(confusion_path, cm,
                               list(labeled.classes), list(labeled.classes))
    metrics_path = out / "metrics.json"
    corpus_io.write_metrics_json(
        metrics_path,
        metrics_payload(cm, labeled.classes, metric.value, args.aggregate))

    written = [confusion_path, metrics_path]
    if args.dump_histograms:
        hist_path = out / "histograms.csv"
        width = len(entries[0].record.vector)
        lines = ["file,class," + ",".join(f"bin_{i}" for i in range(width))]
        for e in entries:
            values = ",".join(repr(float(v)) for v in e.record.vector)
            lines.append(f"{e.file},{e.class_name},{values}")
        hist_path.write_text("\n".join(lines) + "\n")
        written.append(hist_path)

    payload = corpus_io.read_metrics_json(metrics_path)
    err = payload["error_rate"]
    print(f"classified {len(entries)} records into {len(labeled.classes)} classes "
          f"(error rate {err if err is not None else 'undefined'}) -> "
          + ", ".join(str(p) for p in written))
    return 0


_COMMANDS = {
    "synth": cmd_synth,
    "ingest-check": cmd_ingest_check,
    "extract": cmd_extract,
    "compare": cmd_compare,
    "classify": cmd_classify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
