"""Command-line interface.

Verbs: build, represent, reconstruct, transform, negativity, verify, demo.
Output on stdout is canonical JSON (or CSV with --format csv): keys sorted,
floats as %.12e, so identical invocations are byte-identical.  One-line
summaries go to stderr.  Exit codes: 0 success, 1 property failure,
2 invalid arguments, 3 parse error, 4 dimension mismatch, 5 unsupported
transform.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import asdict

import numpy as np

from .analysis import (
    bell_chsh_demo,
    franco_penna,
    negativity_witness,
    nmr_classicality,
    ppt_separability_two_qubit,
    teleport_phase_space,
)
from .errors import (
    DimensionMismatchError,
    FiducialSearchError,
    NotAFrameError,
    ParseError,
    QframeError,
    SingularBasisError,
    UnsupportedDimensionError,
    UnsupportedTransformError,
)
from .frames import apply_transform, frame_bounds, is_dual_pair, negativity, transform_matrix
from .operators import frobenius, maximally_mixed, random_state
from .representations import (
    Representation,
    cohendet,
    ghw,
    hardy_rep,
    havel_rep,
    leonhardt,
    mub_family,
    random_constellation,
    ruzzi_s0,
    sic_rep,
    stratonovich_discrete,
    tetrahedral_constellation,
    wootters,
    wootters_composite,
)
from .serialize import (
    distribution_from_doc,
    distribution_to_csv,
    distribution_to_doc,
    frame_to_doc,
    geometry_to_doc,
    load_json,
    matrix_from_doc,
    matrix_to_doc,
    render_json,
    table_to_csv,
    write_json,
)
from .verify import verify_representation

REPRESENTATION_NAMES = (
    "wootters",
    "ghw",
    "cohendet",
    "leonhardt",
    "stratonovich",
    "ruzzi",
    "mub",
    "hardy",
    "havel",
    "sic",
)

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_ARGS = 2
EXIT_PARSE = 3
EXIT_DIMENSION = 4
EXIT_TRANSFORM = 5


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("QFRAME_SEED", "0"))


def _require_d(args) -> int:
    if args.d is None:
        raise UnsupportedDimensionError("this representation needs --d")
    return args.d


def build_representation(name: str, args) -> Representation:
    """Instantiate a factory from parsed dimension flags."""
    if name not in REPRESENTATION_NAMES:
        raise UnsupportedDimensionError(f"unknown representation {name!r}")
    if name == "wootters":
        if args.dims:
            return wootters_composite(args.dims)
        return wootters(_require_d(args))
    if name == "ghw":
        if args.p is None:
            raise UnsupportedDimensionError("ghw needs --p (and optionally --n)")
        return ghw(args.p, args.n if args.n is not None else 1)
    if name == "cohendet":
        return cohendet(_require_d(args))
    if name == "leonhardt":
        return leonhardt(_require_d(args))
    if name == "stratonovich":
        s = args.s if args.s is not None else 0.5
        if s == 0.5:
            return stratonovich_discrete(s, tetrahedral_constellation())
        points, _ = random_constellation(s, seed=_seed(args))
        return stratonovich_discrete(s, points)
    if name == "ruzzi":
        return ruzzi_s0(_require_d(args))
    if name == "mub":
        return mub_family(_require_d(args)).representation()
    if name == "hardy":
        return hardy_rep(_require_d(args))
    if name == "havel":
        if args.n is None:
            raise UnsupportedDimensionError("havel needs --n qubits")
        return havel_rep(args.n)
    if name == "sic":
        starts = args.starts if getattr(args, "starts", None) is not None else 50
        return sic_rep(_require_d(args), seed=_seed(args), starts=starts)
    raise UnsupportedDimensionError(f"unknown representation {name!r}")


def _load_state(args, dim: int) -> np.ndarray:
    sources = [args.state is not None, args.mixed, args.pure is not None]
    if sum(sources) != 1:
        raise ValueError("choose exactly one of --state FILE, --mixed, --pure SEED")
    if args.mixed:
        return maximally_mixed(dim)
    if args.pure is not None:
        return random_state(dim, rank=1, seed=args.pure)
    rho = matrix_from_doc(load_json(args.state))
    if rho.shape != (dim, dim):
        raise DimensionMismatchError(
            f"state is {rho.shape[0]} x {rho.shape[0]}, representation wants {dim}"
        )
    return rho


def _emit(args, payload: str) -> None:
    sys.stdout.write(payload)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)


def _emit_doc(args, doc, csv: str | None = None) -> None:
    if getattr(args, "format", "json") == "csv":
        if csv is None:
            raise ValueError("this command has no CSV form")
        _emit(args, csv)
    else:
        _emit(args, render_json(doc) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


# verbs


def cmd_build(args) -> int:
    rep = build_representation(args.representation, args)
    ok, residual = is_dual_pair(rep.frame, rep.dual, tol=args.tol)
    lo, hi = frame_bounds(rep.frame)
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    base = os.path.join(outdir, f"{rep.name}-d{rep.dim}")
    files = {}
    write_json(frame_to_doc(rep.frame), base + "-frame.json")
    files["frame"] = base + "-frame.json"
    write_json(frame_to_doc(rep.dual), base + "-dual.json")
    files["dual"] = base + "-dual.json"
    if rep.geometry is not None:
        write_json(geometry_to_doc(rep.geometry), base + "-geometry.json")
        files["geometry"] = base + "-geometry.json"
    doc = {
        "representation": rep.name,
        "dim": int(rep.dim),
        "outcomes": len(rep.labels),
        "frame_bounds": [lo, hi],
        "duality_residual": float(residual),
        "duality_ok": bool(ok),
        "files": files,
    }
    if "overlap_deviation" in rep.meta:
        doc["overlap_deviation"] = float(rep.meta["overlap_deviation"])
    sys.stdout.write(render_json(doc) + "\n")
    _say(
        f"build {rep.name} d={rep.dim}: bounds [{lo:.6g}, {hi:.6g}], "
        f"duality residual {residual:.3e}"
    )
    return EXIT_OK if ok else EXIT_PROPERTY


def cmd_represent(args) -> int:
    rep = build_representation(args.representation, args)
    rho = _load_state(args, rep.dim)
    mu = rep.represent(rho)
    err = frobenius(rep.reconstruct(mu) - rho)
    doc = distribution_to_doc(mu)
    doc["round_trip_error"] = float(err)
    _emit_doc(args, doc, csv=distribution_to_csv(mu))
    _say(f"represent {rep.name} d={rep.dim}: round-trip error {err:.3e}")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    rep = build_representation(args.representation, args)
    dist = distribution_from_doc(load_json(args.dist))
    if dist.representation != rep.name:
        raise DimensionMismatchError(
            f"distribution came from {dist.representation!r}, not {rep.name!r}"
        )
    rho = rep.reconstruct(dist)
    _emit_doc(args, matrix_to_doc(rho))
    _say(f"reconstruct {rep.name} d={rep.dim}: trace {np.trace(rho).real:.6f}")
    return EXIT_OK


def cmd_transform(args) -> int:
    source = build_representation(args.source, args)
    target = build_representation(args.target, args)
    if source.dim != target.dim:
        raise DimensionMismatchError(
            f"source d={source.dim} and target d={target.dim} differ"
        )
    if not (source.frame.minimal and target.frame.minimal):
        raise UnsupportedTransformError(
            "transformation needs minimal frames (d^2 outcomes) on both sides"
        )
    dist = distribution_from_doc(load_json(args.dist))
    if dist.labels != source.labels:
        raise DimensionMismatchError("distribution labels do not match the source")
    T = transform_matrix(source.dual, target.frame)
    out = apply_transform(dist, T, target.frame)
    _emit_doc(args, distribution_to_doc(out), csv=distribution_to_csv(out))
    _say(f"transform {source.name} -> {target.name} at d={source.dim}")
    return EXIT_OK


def cmd_negativity(args) -> int:
    rep = build_representation(args.representation, args)
    doc = {"representation": rep.name, "dim": int(rep.dim)}
    if args.witness:
        w = negativity_witness(rep, tol=args.tol if args.tol is not None else 1e-6)
        doc["witness"] = {
            "found": w["found"],
            "kind": w.get("kind"),
            "value": w.get("value"),
            "label": None if "label" not in w else list(_label_list(w["label"])),
        }
        if "witness" in w:
            doc["witness"]["operator"] = matrix_to_doc(w["witness"])
        _emit_doc(args, doc)
        _say(f"negativity witness for {rep.name}: {w.get('kind', 'none')}")
        return EXIT_OK if w["found"] else EXIT_PROPERTY
    rho = _load_state(args, rep.dim)
    report = negativity(rep.represent(rho))
    doc.update(asdict(report))
    _emit_doc(args, doc)
    _say(f"negativity {rep.name}: min {report.min_value:.6e}")
    return EXIT_OK


def _label_list(label):
    if isinstance(label, tuple):
        return [_label_list(x) for x in label]
    return label


def cmd_verify(args) -> int:
    try:
        rep = build_representation(args.representation, args)
    except FiducialSearchError as exc:
        doc = {
            "representation": args.representation,
            "checks": [
                {
                    "name": "fiducial_search",
                    "passed": False,
                    "error": f"no fiducial found: {exc}",
                }
            ],
            "all_passed": False,
        }
        _emit_doc(args, doc)
        _say(f"verify {args.representation}: no fiducial found")
        return EXIT_PROPERTY
    report = verify_representation(
        rep, seed=_seed(args), samples=args.samples if args.samples else 200
    )
    _emit_doc(args, report)
    status = "all passed" if report["all_passed"] else "FAILED"
    _say(f"verify {rep.name} d={rep.dim}: {len(report['checks'])} checks, {status}")
    return EXIT_OK if report["all_passed"] else EXIT_PROPERTY


def _demo_teleport(args):
    d = args.d if args.d is not None else 3
    rho = random_state(d, rank=1, seed=_seed(args))
    outcomes = []
    worst = 0.0
    for a in range(d):
        for b in range(d):
            out = teleport_phase_space(d, rho, (a, b))
            outcomes.append(
                {
                    "outcome": [a, b],
                    "probability": out.probability,
                    "residual": out.displacement_residual,
                }
            )
            worst = max(worst, out.displacement_residual)
    doc = {
        "demo": "teleport",
        "d": d,
        "seed": _seed(args),
        "max_residual": worst,
        "outcomes": outcomes,
    }
    csv = table_to_csv(
        ["a", "b", "probability", "residual"],
        [[o["outcome"][0], o["outcome"][1], o["probability"], o["residual"]] for o in outcomes],
    )
    return doc, csv, f"teleport d={d}: max residual {worst:.3e} over {d*d} outcomes"


def _demo_nmr(args):
    n = args.n if args.n is not None else 2
    eps = args.epsilon if args.epsilon is not None else 0.1
    report = nmr_classicality(n, eps)
    doc = {"demo": "nmr", **asdict(report)}
    csv = table_to_csv(["key", "value"], sorted(asdict(report).items()))
    verdict = "classical" if report.classical else "nonclassical"
    return doc, csv, (
        f"nmr n={n} epsilon={eps:.6g}: sampled min {report.sampled_min:.3e} ({verdict})"
    )


def _demo_bell(args):
    degs = [float(x) for x in (args.angles or "0,60,120").split(",")]
    if len(degs) != 3:
        raise ValueError("--angles needs three comma-separated degrees")
    a, b, c = (np.deg2rad(x) for x in degs)
    result = bell_chsh_demo(a, b, c)
    doc = {"demo": "bell", "angles_degrees": degs, **result}
    csv = table_to_csv(["key", "value"], sorted(result.items()))
    return doc, csv, (
        f"bell angles {degs}: lhs {result['lhs']:.4f}, rhs {result['rhs']:.4f}, "
        f"violated {result['violated']}"
    )


def _demo_entanglement(args):
    samples = args.samples if args.samples else 100
    seed = _seed(args)
    from .operators import tensor  # local import keeps the hot path light

    rep = wootters_composite([2, 2])
    rows = []
    conclusive = 0
    agreements = 0
    for k in range(samples):
        rho = random_state(4, rank=1 + (seed + k) % 4, seed=seed + k)
        fp = franco_penna(rep.represent(rho))
        ppt = ppt_separability_two_qubit(rho)
        if fp.verdict == "entangled":
            conclusive += 1
            if ppt.verdict == "entangled":
                agreements += 1
        rows.append(
            [seed + k, 1 + (seed + k) % 4, fp.min_value, fp.verdict, ppt.min_value, ppt.verdict]
        )
    doc = {
        "demo": "entanglement",
        "samples": samples,
        "seed": seed,
        "conclusive": conclusive,
        "agreements": agreements,
        "disagreements": conclusive - agreements,
    }
    csv = table_to_csv(
        ["seed", "rank", "lattice_min", "lattice_verdict", "pt_min_eig", "ppt_verdict"],
        rows,
    )
    return doc, csv, (
        f"entanglement sweep: {conclusive}/{samples} conclusive, "
        f"{conclusive - agreements} disagreements"
    )


def cmd_demo(args) -> int:
    runners = {
        "teleport": _demo_teleport,
        "nmr": _demo_nmr,
        "bell": _demo_bell,
        "entanglement": _demo_entanglement,
    }
    if args.name not in runners:
        raise ValueError(f"unknown demo {args.name!r}; pick from {sorted(runners)}")
    doc, csv, summary = runners[args.name](args)
    _emit_doc(args, doc, csv=csv)
    _say(f"demo {summary}")
    return EXIT_OK


def _add_dim_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, help="Hilbert-space dimension")
    p.add_argument("--dims", type=_dims_arg, help="composite dimensions, e.g. 2,2")
    p.add_argument("--p", type=int, help="field characteristic")
    p.add_argument("--n", type=int, help="field power or qubit count")
    p.add_argument("--s", type=float, help="spin (0.5, 1, 1.5, ...)")
    p.add_argument("--seed", type=int, default=None, help="seed (default: QFRAME_SEED or 0)")
    p.add_argument("--tol", type=float, default=None, help="tolerance override")
    p.add_argument("--out", help="output file or directory")
    p.add_argument("--format", choices=["json", "csv"], default="json")


def _dims_arg(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad dims {text!r}") from exc


def _add_state_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--state", help="matrix JSON file")
    p.add_argument("--mixed", action="store_true", help="use the maximally mixed state")
    p.add_argument("--pure", type=int, default=None, help="seed for a random pure state")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qframe",
        description="Quasi-probability representations of finite-dimensional quantum theory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a frame/dual pair and write artifacts")
    p.add_argument("representation", choices=REPRESENTATION_NAMES)
    _add_dim_flags(p)
    p.add_argument("--starts", type=int, default=None, help="fiducial search starts")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("represent", help="state -> quasi-probability distribution")
    p.add_argument("representation", choices=REPRESENTATION_NAMES)
    _add_dim_flags(p)
    _add_state_flags(p)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("reconstruct", help="distribution -> operator")
    p.add_argument("representation", choices=REPRESENTATION_NAMES)
    _add_dim_flags(p)
    p.add_argument("--dist", required=True, help="distribution JSON file")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("transform", help="map a distribution between representations")
    p.add_argument("source", choices=REPRESENTATION_NAMES)
    p.add_argument("target", choices=REPRESENTATION_NAMES)
    _add_dim_flags(p)
    p.add_argument("--dist", required=True, help="distribution JSON file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("negativity", help="negativity of a represented state")
    p.add_argument("representation", choices=REPRESENTATION_NAMES)
    _add_dim_flags(p)
    _add_state_flags(p)
    p.add_argument("--witness", action="store_true", help="search for a nonclassicality witness")
    p.set_defaults(func=cmd_negativity)

    p = sub.add_parser("verify", help="run the property suite")
    p.add_argument("representation", choices=REPRESENTATION_NAMES)
    _add_dim_flags(p)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--starts", type=int, default=None, help="fiducial search starts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="run a bundled demonstration")
    p.add_argument("name", choices=["teleport", "nmr", "bell", "entanglement"])
    _add_dim_flags(p)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--angles", help="three comma-separated degrees")
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _say(f"error: {exc}")
        return EXIT_PARSE
    except DimensionMismatchError as exc:
        _say(f"error: {exc}")
        return EXIT_DIMENSION
    except UnsupportedTransformError as exc:
        _say(f"error: {exc}")
        return EXIT_TRANSFORM
    except UnsupportedDimensionError as exc:
        _say(f"error: {exc}")
        return EXIT_ARGS
    except (FiducialSearchError, NotAFrameError, SingularBasisError) as exc:
        _say(f"error: {exc}")
        return EXIT_PROPERTY
    except QframeError as exc:
        _say(f"error: {exc}")
        return EXIT_ARGS
    except ValueError as exc:
        _say(f"error: {exc}")
        return EXIT_ARGS
    except OSError as exc:
        _say(f"error: {exc}")
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
