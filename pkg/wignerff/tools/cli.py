#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
The ``wignerff`` command line tool.

    wignerff <subcommand> [--config-file FILE] [--output-dir DIR] [flags] [KEY VALUE ...]

Exit status is 0 on success, 1 when an input fails validation and 2 when a
golden check of ``reproduce`` does not match.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from fvcore.common.file_io import PathManager
from wignerff.classify import gamma_signature, similarity_orbits, w_variant_census
from wignerff.evaluation import GOLDEN_CHECK_REGISTRY, GoldenEvaluator
from wignerff.field import field_tables, format_element
from wignerff.geometry import striations
from wignerff.model_zoo import get_config
from wignerff.nets import (
    build_net,
    load_net,
    mub_family,
    net_from_cfg,
    pair_from_cfg,
    verify_mub,
)
from wignerff.nets.io import field_from_cfg, net_to_dict, pair_to_dict
from wignerff.setup import (
    add_opts_argument,
    basic_argument_parser,
    prepare_for_launch,
    setup_after_launch,
)
from wignerff.utils.errors import GoldenMismatchError, MalformedInputError, WignerFFError
from wignerff.utils.misc import complex_to_json, format_table, real_to_json
from wignerff.wigner import (
    load_probabilities,
    load_state,
    named_state,
    render_heatmap,
    tomographic_reconstruct,
    wigner_transform,
)


logger = logging.getLogger("wignerff.tools.cli")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_GOLDEN = 2


def write_json(data: Dict[str, Any], path: Optional[str]):
    if not path:
        return
    dirname = os.path.dirname(path)
    if dirname:
        PathManager.mkdirs(dirname)
    with PathManager.open(path, "w") as f:
        json.dump(data, f, indent=2)
    logger.info(f"Wrote {path}")


def _out_path(args, output_dir: str, default_name: str) -> Optional[str]:
    if args.out:
        return args.out
    if output_dir:
        return os.path.join(output_dir, default_name)
    return None


def _is_file(path: str) -> bool:
    return path.endswith(".json") or PathManager.isfile(path)


def _preset(args, cfg, name: str):
    preset = get_config(name)
    r, n = preset.FIELD.R, preset.FIELD.N
    if getattr(args, "field", None) and (cfg.FIELD.R, cfg.FIELD.N) != (r, n):
        raise MalformedInputError(
            f"--field {args.field} conflicts with preset {name} over F_{r}^{n}"
        )
    return preset


def _net(args, cfg):
    """--net names a net JSON file or a preset; otherwise the config decides."""
    source = getattr(args, "net", None)
    if not source:
        return net_from_cfg(cfg)
    if _is_file(source):
        return load_net(source, max_order=cfg.FIELD.MAX_ORDER or None)
    return net_from_cfg(_preset(args, cfg, source))


def _pair(args, cfg):
    source = getattr(args, "pair", None) or getattr(args, "net", None)
    if not source:
        return pair_from_cfg(cfg)
    if _is_file(source):
        # a net file without "choice" is enough
        return load_net(source, max_order=cfg.FIELD.MAX_ORDER or None).pair
    return pair_from_cfg(_preset(args, cfg, source))


def run_field_tables(args, cfg, output_dir):
    spec = field_from_cfg(cfg)
    add, mul = field_tables(spec)
    labels = [format_element(x) for x in spec.elements()]
    for title, table in (("+", add), ("*", mul)):
        print(format_table([[a] + row for a, row in zip(labels, table)], [title] + labels))
        print()
    write_json(
        {"field": {"r": spec.r, "n": spec.n}, "elements": labels, "add": add, "mul": mul},
        _out_path(args, output_dir, "field_tables.json"),
    )


def run_striations(args, cfg, output_dir):
    spec = field_from_cfg(cfg)
    rows, data = [], []
    for S in striations(spec):
        lines = []
        for t in spec.elements():
            points = [str(x) for x in S.line(t).points]
            lines.append({"offset": format_element(t), "points": points})
            rows.append([S.index, str(S.direction), format_element(t), " ".join(points)])
        data.append({"index": S.index, "direction": str(S.direction), "lines": lines})
    print(format_table(rows, ["striation", "direction", "offset", "points"]))
    write_json(
        {"field": {"r": spec.r, "n": spec.n}, "striations": data},
        _out_path(args, output_dir, "striations.json"),
    )


def run_mub(args, cfg, output_dir):
    pair = _pair(args, cfg)
    family = mub_family(pair.spec, pair)
    report = verify_mub(family)
    if not report.ok(cfg.TOLERANCE.NUMERIC):
        raise WignerFFError(
            f"bases are not mutually unbiased, deviation {report.max_deviation:.3g}"
        )
    digits = cfg.OUTPUT.SIGNIFICANT_DIGITS
    data = {
        "field": {"r": pair.spec.r, "n": pair.spec.n},
        "pair": pair_to_dict(pair),
        "bases": [
            {
                "striation": basis.index,
                "direction": str(basis.striation.direction),
                "vectors": {
                    format_element(t): complex_to_json(basis.vector(t), digits)
                    for t in basis.labels
                },
            }
            for basis in family.bases
        ],
    }
    path = _out_path(args, output_dir, "mub.json")
    if path:
        write_json(data, path)
    else:
        print(json.dumps(data, indent=2))


def _wigner_output(net, W, cfg, title: str) -> Dict[str, Any]:
    digits = cfg.OUTPUT.SIGNIFICANT_DIGITS
    out = net_to_dict(net)
    out["values"] = real_to_json(W.values, digits)
    out["marginals"] = real_to_json(W.marginals(), digits)
    if W.deviation is not None:
        out["deviation"] = W.deviation
    out["heatmap"] = render_heatmap(W, title=title)
    return out


def run_wigner(args, cfg, output_dir):
    net = _net(args, cfg)
    if _is_file(args.state):
        rho = load_state(args.state, cfg.TOLERANCE.ALGEBRAIC)
        title = os.path.basename(args.state)
    else:
        rho, title = named_state(args.state, net.dim), args.state
    W = wigner_transform(rho, net, tol=cfg.TOLERANCE.ALGEBRAIC)
    out = _wigner_output(net, W, cfg, title)
    print(out["heatmap"])
    write_json(out, _out_path(args, output_dir, "wigner.json"))


def run_tomo(args, cfg, output_dir):
    net = _net(args, cfg)
    P = load_probabilities(args.probabilities)
    W = tomographic_reconstruct(
        P, net, normalize=args.normalize, tol=cfg.TOLERANCE.PROBABILITY
    )
    out = _wigner_output(net, W, cfg, os.path.basename(args.probabilities))
    print(out["heatmap"])
    write_json(out, _out_path(args, output_dir, "tomography.json"))


def run_classify(args, cfg, output_dir):
    pair = _pair(args, cfg)
    spec = pair.spec
    if args.census:
        census = w_variant_census(
            spec,
            E=pair.E,
            max_order=cfg.CLASSIFY.MAX_ORDER,
            num_workers=cfg.CLASSIFY.NUM_WORKERS,
        )
        print(census.format())
        write_json(census.to_dict(), _out_path(args, output_dir, "census.json"))
        return
    report = similarity_orbits(
        spec,
        pair,
        max_order=cfg.CLASSIFY.MAX_ORDER,
        burnside=cfg.CLASSIFY.BURNSIDE,
        num_workers=cfg.CLASSIFY.NUM_WORKERS,
    )
    print(report.format())
    data = report.to_dict()
    if report.discriminants is not None:
        # which Gamma_00 array belongs to which value of D
        rows = []
        for entry, orbit, D in zip(data["orbits"], report.orbits, report.discriminants):
            values, orientation = gamma_signature(build_net(pair, orbit[0]))
            entry["gamma_signature"] = {"values": list(values), "orientation": orientation}
            rows.append([format_element(D), values[-1] if values else None, orientation])
        print()
        print(format_table(rows, ["D", "max 16 Gamma_00", "orientation"]))
    write_json(data, _out_path(args, output_dir, "classify.json"))


def run_reproduce(args, cfg, output_dir):
    evaluator = GoldenEvaluator(quick=args.quick, only=args.only)
    evaluator.evaluate()
    print(evaluator.summary())
    write_json(evaluator.to_dict(), _out_path(args, output_dir, "reproduce.json"))
    if not evaluator.passed:
        failed = [r.name for r in evaluator.results if not r.passed]
        raise GoldenMismatchError(f"golden checks failed: {', '.join(failed)}")


SUBCOMMANDS = {
    "field-tables": (run_field_tables, "print the addition and multiplication tables"),
    "striations": (run_striations, "list the lines of every striation"),
    "mub": (run_mub, "emit the labelled mutually unbiased bases as JSON"),
    "wigner": (run_wigner, "Wigner function of a state"),
    "tomo": (run_tomo, "Wigner function from line probabilities"),
    "classify": (run_classify, "similarity classes of quantum nets"),
    "reproduce": (run_reproduce, "run the golden checks"),
}


def build_parser():
    common = basic_argument_parser(add_help=False)
    common.add_argument("--out", default=None, help="write the JSON result to this file")
    parser = argparse.ArgumentParser(description="Discrete Wigner functions over finite fields")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for name, (_, help_text) in SUBCOMMANDS.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        if name in ("mub", "classify"):
            sub.add_argument("--pair", default=None, help="net/pair JSON file or preset name")
        if name in ("wigner", "tomo", "classify"):
            sub.add_argument("--net", default=None, help="net JSON file or preset name")
        if name == "wigner":
            sub.add_argument(
                "--state", default="mixed", help="state JSON file or a named state, e.g. up-right"
            )
        if name == "tomo":
            sub.add_argument(
                "--probs",
                "--probabilities",
                dest="probabilities",
                required=True,
                help="probability JSON file",
            )
            sub.add_argument(
                "--normalize", action="store_true", help="rescale frequencies per striation"
            )
        if name == "classify":
            sub.add_argument("--census", action="store_true", help="one report per w")
        if name == "reproduce":
            sub.add_argument("--quick", action="store_true", help="skip the slow checks")
            sub.add_argument(
                "--only", nargs="+", default=None, choices=[n for n, _ in GOLDEN_CHECK_REGISTRY]
            )
        add_opts_argument(sub)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg, output_dir = prepare_for_launch(args)
        setup_after_launch(cfg, output_dir)
        func, _ = SUBCOMMANDS[args.subcommand]
        func(args, cfg, output_dir)
    except GoldenMismatchError as e:
        logger.error(str(e))
        return EXIT_GOLDEN
    except WignerFFError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INVALID
    except (AssertionError, KeyError, ValueError, OSError) as e:
        # yacs reports unknown override keys with an assertion
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INVALID
    return EXIT_OK


def cli():
    sys.exit(main())


if __name__ == "__main__":
    cli()
