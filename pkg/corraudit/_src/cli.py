# Copyright 2026 The CorrAudit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line front-end.

  corraudit summarize <src> [--columns a,b]
  corraudit correlate <src> --target Y --predictors a,b
  corraudit fit <src> --target Y --predictor X
  corraudit evaluate <src> --target Y --predictor X --protocol P
  corraudit audit <src> --target Y --predictors a,b [--protocols P1,P2]
  corraudit study <mtcars|iris>
  corraudit plot <src> --target Y --predictor X --out f.svg
  corraudit datasets export <name> --out f.csv | datasets list

A source is a CSV path or `@name` for an embedded dataset. Results go to
stdout; diagnostics go to stderr. Exit codes: 0 success, 1 usage error,
2 data error, 3 numeric error.
"""
# pylint: disable=g-importing-member
import contextlib
import json
import os
import sys
from typing import Dict, List, Optional, Sequence, TextIO

from absl import app
from absl import logging
from absl.flags import argparse_flags
import pandas as pd

from corraudit._src import audit
from corraudit._src import constants
from corraudit._src import dataset as dataset_lib
from corraudit._src import linear_model
from corraudit._src import plotting
from corraudit._src import protocols
from corraudit._src import reference_data
from corraudit._src import stats
from corraudit._src.config import get_config
from corraudit._src.errors import CorrAuditError
from corraudit._src.errors import DataError
from corraudit._src.errors import EXIT_OK
from corraudit._src.errors import EXIT_USAGE
from corraudit._src.errors import UsageError
from corraudit._src.utils import special


_FORMATS = ("text", "json", "csv")


class _ArgumentParser(argparse_flags.ArgumentParser):
  """Reports usage errors with exit code 1."""

  def error(self, message):
    self.print_usage(sys.stderr)
    self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _split(text: str) -> List[str]:
  items = [x.strip() for x in text.split(",") if x.strip()]
  if not items:
    raise UsageError(f"Expected a comma separated list, got {text!r}.")
  return items


def _version() -> str:
  from corraudit import __version__  # pylint: disable=g-import-not-at-top
  return __version__


############################################################################
####  Parser.
############################################################################


def _add_source(parser) -> None:
  parser.add_argument("source", help="CSV path, or @mtcars / @iris.")
  parser.add_argument("--skip-non-numeric", action="store_true",
                      help="Skip columns that do not parse as numbers.")


def _add_format(parser) -> None:
  parser.add_argument("--format", choices=_FORMATS, default="text")


def _add_evaluation_options(parser) -> None:
  parser.add_argument("--seed", type=int, default=None,
                      help="Shuffle seed for holdout and kfold protocols.")
  parser.add_argument("--zero-policy", choices=("error", "exclude"),
                      default=None, help="MAPE handling of zero targets.")


def build_parser(
    inherit_absl_flags: bool = True) -> argparse_flags.ArgumentParser:
  """Builds the sub-command parser."""
  kwargs = {} if inherit_absl_flags else {"inherited_absl_flags": None}
  parser = _ArgumentParser(
      prog="corraudit",
      description="Audit Pearson's correlation as a predictor selector.",
      **kwargs)
  commands = parser.add_subparsers(dest="command", required=True)
  sub = lambda name, **kw: commands.add_parser(  # pylint: disable=g-long-lambda
      name, inherited_absl_flags=None, **kw)

  p = sub("summarize", help="Min, mean, max and variances of columns.")
  _add_source(p)
  p.add_argument("--columns", default=None)
  _add_format(p)

  p = sub("correlate", help="Pearson's r of predictors with a target.")
  _add_source(p)
  p.add_argument("--target", required=True)
  p.add_argument("--predictors", required=True)
  _add_format(p)

  p = sub("fit", help="Least-squares line of a target on one predictor.")
  _add_source(p)
  p.add_argument("--target", required=True)
  p.add_argument("--predictor", required=True)
  _add_format(p)

  p = sub("evaluate", help="Error metrics of one fit under one protocol.")
  _add_source(p)
  p.add_argument("--target", required=True)
  p.add_argument("--predictor", required=True)
  p.add_argument("--protocol", default="insample")
  _add_evaluation_options(p)
  _add_format(p)

  p = sub("audit", help="Compare |r| rankings with error-metric rankings.")
  _add_source(p)
  p.add_argument("--target", required=True)
  p.add_argument("--predictors", required=True)
  p.add_argument("--protocols", default="insample")
  p.add_argument("--metrics", default=",".join(constants.METRIC_NAMES))
  _add_evaluation_options(p)
  _add_format(p)

  p = sub("study", help="Audit one of the embedded study cases.")
  p.add_argument("name", choices=reference_data.available_datasets())
  p.add_argument("--seed", type=int, default=None)
  _add_format(p)

  p = sub("plot", help="SVG scatter plot with the fitted line.")
  _add_source(p)
  p.add_argument("--target", required=True)
  p.add_argument("--predictor", required=True)
  p.add_argument("--out", required=True)
  p.add_argument("--width", type=int, default=None)
  p.add_argument("--height", type=int, default=None)
  p.add_argument("--no-band", action="store_true")
  p.add_argument("--no-fit", action="store_true")

  p = sub("datasets", help="Embedded datasets.")
  actions = p.add_subparsers(dest="action", required=True)
  export = actions.add_parser("export", inherited_absl_flags=None,
                              help="Write an embedded dataset as CSV.")
  export.add_argument("name")
  export.add_argument("--out", required=True)
  actions.add_parser("list", inherited_absl_flags=None,
                     help="List embedded datasets.")
  return parser


############################################################################
####  Rendering.
############################################################################


def _json(payload) -> str:
  return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv(rows: Sequence[Dict[str, object]], columns: Sequence[str]) -> str:
  def cell(value):
    if isinstance(value, float):
      return special.shortest_repr(value)
    return "" if value is None else str(value)
  frame = pd.DataFrame([[cell(row[c]) for c in columns] for row in rows],
                       columns=list(columns))
  return frame.to_csv(index=False, lineterminator="\n")


def _text(rows: Sequence[Sequence[object]]) -> str:
  digits = get_config().text_significant_digits
  def cell(value):
    if isinstance(value, float):
      return special.format_significant(value, digits)
    return "n/a" if value is None else str(value)
  return "".join("\t".join(cell(v) for v in row) + "\n" for row in rows)


def _r2(r: Optional[float]) -> str:
  return special.format_fixed(r, get_config().correlation_decimals)


############################################################################
####  Commands.
############################################################################


def _load_source(args) -> dataset_lib.Dataset:
  source = args.source
  if source.startswith("@"):
    return reference_data.load_embedded(source[1:])
  name = os.path.splitext(os.path.basename(source))[0]
  try:
    with open(source, "rb") as f:
      return dataset_lib.load_csv(f, name,
                                  skip_non_numeric=args.skip_non_numeric)
  except OSError as e:
    raise DataError(f"Cannot read {source!r}: {e.strerror}.") from None


def _seed(args) -> int:
  return get_config().default_seed if args.seed is None else args.seed


def _cmd_summarize(args, out: TextIO) -> None:
  ds = _load_source(args)
  labels = None if args.columns is None else _split(args.columns)
  summaries = dataset_lib.summarize_all(ds, labels)
  columns = ("label", "n", "min", "mean", "max", "variance_pop",
             "variance_sample")
  rows = [{c: getattr(s, c) for c in columns} for s in summaries]
  if args.format == "json":
    out.write(_json({"dataset": ds.name, "columns": rows}))
  elif args.format == "csv":
    out.write(_csv(rows, columns))
  else:
    out.write(_text([columns] + [[r[c] for c in columns] for r in rows]))


def _cmd_correlate(args, out: TextIO) -> None:
  ds = _load_source(args)
  ys = dataset_lib.column(ds, args.target)
  results = [stats.pearson_r(dataset_lib.column(ds, x), ys, x_label=x,
                             y_label=args.target)
             for x in _split(args.predictors)]
  if args.format == "json":
    out.write(_json({
        "dataset": ds.name, "target": args.target,
        "correlations": {c.x_label: {"r": c.r, "n": c.n} for c in results}}))
  elif args.format == "csv":
    out.write(_csv([{"predictor": c.x_label, "r": c.r, "n": c.n}
                    for c in results], ("predictor", "r", "n")))
  else:
    out.write(_text([("predictor", "r", "r_full", "n")] +
                    [(c.x_label, _r2(c.r), c.r, c.n) for c in results]))


def _fit_payload(fit: linear_model.FitResult) -> Dict[str, object]:
  return {"alpha": fit.alpha, "beta": fit.beta, "r": fit.r, "n": fit.n,
          "residual_std_error": fit.residual_std_error}


def _cmd_fit(args, out: TextIO) -> None:
  ds = _load_source(args)
  fit = linear_model.fit_ols(dataset_lib.column(ds, args.predictor),
                             dataset_lib.column(ds, args.target),
                             x_label=args.predictor, y_label=args.target)
  payload = _fit_payload(fit)
  if args.format == "json":
    out.write(_json(dict(payload, dataset=ds.name, target=args.target,
                         predictor=args.predictor)))
  elif args.format == "csv":
    out.write(_csv([payload], tuple(payload)))
  else:
    rows = [(k, v) for k, v in payload.items()]
    rows.append(("r_2dp", _r2(fit.r)))
    out.write(_text(rows))


def _cmd_evaluate(args, out: TextIO) -> None:
  ds = _load_source(args)
  protocol = protocols.parse_protocol(args.protocol, seed=_seed(args))
  outcome = protocols.run_protocol(ds, args.target, args.predictor, protocol,
                                   zero_policy=args.zero_policy)
  m = outcome.metrics
  payload = {"mape": m.mape, "mae": m.mae, "rmse": m.rmse, "n": m.n,
             "n_used": m.n_used,
             "n_excluded_zero_target": m.n_excluded_zero_target,
             "n_train": outcome.n_train, "n_test": outcome.n_test}
  if args.format == "json":
    out.write(_json({
        "dataset": ds.name, "target": args.target,
        "predictor": args.predictor, "protocol": str(protocol),
        "seed": protocol.seed,
        "zero_policy": args.zero_policy or get_config().zero_policy,
        "metrics": payload, "fit": _fit_payload(outcome.fit_on_full)}))
  elif args.format == "csv":
    out.write(_csv([payload], tuple(payload)))
  else:
    out.write(_text([("protocol", str(protocol))] + list(payload.items())))


def _write_report(report: audit.AuditReport, seed: int, fmt: str,
                  out: TextIO) -> None:
  """Writes an audit report as JSON, a CSV of cells, or a text summary."""
  spec = report.spec
  if fmt == "json":
    out.write(_json(audit.report_to_dict(report, _version(), seed)))
    return
  if fmt == "csv":
    columns = ("protocol", "predictor", "r", "mape", "mae", "rmse",
               "n_train", "n_test")
    rows = []
    for protocol in spec.protocols:
      for x in spec.x_labels:
        outcome = report.evaluations[(x, str(protocol))]
        rows.append({"protocol": str(protocol), "predictor": x,
                     "r": report.correlations[x].r,
                     "mape": outcome.metrics.mape, "mae": outcome.metrics.mae,
                     "rmse": outcome.metrics.rmse,
                     "n_train": outcome.n_train, "n_test": outcome.n_test})
    out.write(_csv(rows, columns))
    return
  digits = get_config().text_significant_digits
  lines = [f"dataset: {report.dataset}", f"target: {spec.y_label}"]
  ranking = report.correlation_ranking
  lines.append("correlation ranking: " + ", ".join(
      f"{x} (r = {_r2(report.correlations[x].r)})" for x in ranking.order))
  for protocol in spec.protocols:
    for metric in spec.metrics:
      key = (str(protocol), metric)
      metric_ranking = report.metric_rankings[key]
      verdict = ("disagrees" if report.kendall_tau_distances[key]
                 else "agrees")
      lines.append(f"{key[0]} {metric} ranking: " + ", ".join(
          f"{x} ({special.format_significant(v, digits)})"
          for x, v in zip(metric_ranking.order, metric_ranking.values))
                   + f" [{verdict}]")
  lines.append(f"disagreements: {len(report.disagreements)}")
  out.write("\n".join(lines) + "\n")


def _cmd_audit(args, out: TextIO) -> None:
  ds = _load_source(args)
  seed = _seed(args)
  spec = audit.AuditSpec(
      y_label=args.target, x_labels=tuple(_split(args.predictors)),
      protocols=tuple(protocols.parse_protocol(p, seed=seed)
                      for p in _split(args.protocols)),
      metrics=tuple(_split(args.metrics)), zero_policy=args.zero_policy)
  _write_report(audit.compile_audit(ds, spec), seed, args.format, out)


def _cmd_study(args, out: TextIO) -> None:
  seed = _seed(args)
  ds = reference_data.load_embedded(args.name)
  spec = reference_data.study_case(args.name, seed=seed)
  _write_report(audit.compile_audit(ds, spec), seed, args.format, out)


def _cmd_plot(args, out: TextIO) -> None:
  ds = _load_source(args)
  spec = plotting.PlotSpec(
      x_label=args.predictor, y_label=args.target, width=args.width,
      height=args.height, show_band=False if args.no_band else None,
      show_fit=not args.no_fit)
  svg = plotting.render_plot(ds, spec)
  try:
    with open(args.out, "wb") as f:
      f.write(svg)
  except OSError as e:
    raise DataError(f"Cannot write {args.out!r}: {e.strerror}.") from None
  out.write(f"{args.out}\n")


def _cmd_datasets(args, out: TextIO) -> None:
  if args.action == "list":
    out.write("".join(f"{name}\n"
                      for name in reference_data.available_datasets()))
    return
  payload = reference_data.embedded_payload(args.name)
  try:
    with open(args.out, "wb") as f:
      f.write(payload)
  except OSError as e:
    raise DataError(f"Cannot write {args.out!r}: {e.strerror}.") from None
  out.write(f"{args.out}\n")


_COMMANDS = {
    "summarize": _cmd_summarize,
    "correlate": _cmd_correlate,
    "fit": _cmd_fit,
    "evaluate": _cmd_evaluate,
    "audit": _cmd_audit,
    "study": _cmd_study,
    "plot": _cmd_plot,
    "datasets": _cmd_datasets,
}


def execute(args, out: TextIO, err: TextIO) -> int:
  """Runs parsed arguments; returns the exit code."""
  try:
    _COMMANDS[args.command](args, out)
  except CorrAuditError as e:
    logging.debug("%s failed: %r", args.command, e)
    err.write(f"corraudit {args.command}: error: {e}\n")
    return e.exit_code
  return EXIT_OK


def dispatch(argv: Sequence[str], out: Optional[TextIO] = None,
             err: Optional[TextIO] = None) -> int:
  """Parses `argv` (without the program name) and runs the command."""
  out = sys.stdout if out is None else out
  err = sys.stderr if err is None else err
  try:
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
      args = build_parser(inherit_absl_flags=False).parse_args(list(argv))
  except SystemExit as e:
    return EXIT_OK if e.code is None else int(e.code)
  return execute(args, out, err)


def _parse_flags(argv: List[str]):
  return build_parser().parse_args(argv[1:])


def main(args) -> int:
  return execute(args, sys.stdout, sys.stderr)


def run():
  app.run(main, flags_parser=_parse_flags)


if __name__ == "__main__":
  run()
