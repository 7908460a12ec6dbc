"""Command-line front end.

Exit codes: 0 success, 1 valid input but a negative answer (not commuting,
not exact, no fractal generator, oracle mismatch, barrier violated),
2 input error, 3 a configured cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from math import lcm
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .catalog import catalog_get, catalog_names, random_commuting_code
from .codes import CodeDef, CodeError, check_commuting, parse_code_dict
from .groebner import GroebnerCapExceeded, set_caps
from .laurent import ParseError, parse_poly

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    """Defaults loadable from a JSON file; command-line flags override them."""

    format: str = "json"
    seed: int = 0
    jobs: int = 1
    r_max: int = 4
    pair_cap: int = 10_000
    basis_cap: int = 5_000
    cell_limit: int = 200_000
    brute_bound: int = 20

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        data = _loads(text, "config")
        if not isinstance(data, dict):
            raise InputError("config must be a JSON object")
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise InputError(f"unknown config keys: {sorted(extra)}")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.format not in ("json", "text", "csv"):
            raise InputError(f"unknown format {self.format!r}")
        for name in ("jobs", "pair_cap", "basis_cap", "cell_limit", "brute_bound"):
            val = getattr(self, name)
            if not isinstance(val, int) or val < 1:
                raise InputError(f"{name} must be a positive integer")
        if not isinstance(self.r_max, int) or self.r_max < 0:
            raise InputError("r_max must be a nonnegative integer")


def _loads(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON in {what} at line {e.lineno} column {e.colno} "
                         f"(char {e.pos}): {e.msg}") from None


# ---------------------------------------------------------------------------
# output


def _emit(obj: Any, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    elif fmt == "text":
        _emit_text(obj, out, "")
    else:
        rows = obj if isinstance(obj, list) else [obj]
        cols = sorted({k for r in rows for k in r})
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_csv_cell(r.get(c)) for c in cols])


def _csv_cell(v: Any) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return ""
    return str(v)


def _emit_text(obj: Any, out, indent: str) -> None:
    if isinstance(obj, list):
        for i, item in enumerate(obj):
            if isinstance(item, (dict, list)):
                out.write(f"{indent}- [{i}]\n")
                _emit_text(item, out, indent + "  ")
            else:
                out.write(f"{indent}- {item}\n")
    elif isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                out.write(f"{indent}{k}:\n")
                _emit_text(v, out, indent + "  ")
            else:
                out.write(f"{indent}{k}: {json.dumps(v) if not isinstance(v, str) else v}\n")
    else:
        out.write(f"{indent}{obj}\n")


# ---------------------------------------------------------------------------
# input


def _load_raw(args) -> tuple[str, int, int, Any]:
    if args.catalog:
        c = catalog_get(args.catalog)
        return c.name, c.D, c.q, c.sigma
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return parse_code_dict(_loads(text, args.input))
    raise InputError("give --catalog NAME or --input PATH")


def _load_code(args) -> CodeDef:
    name, D, q, sigma = _load_raw(args)
    return CodeDef(name, D, q, sigma)


def _parse_sizes(args, D: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for L in args.L or []:
        out.append((L,) * D)
    for s in args.sizes or []:
        try:
            t = tuple(int(x) for x in s.split(","))
        except ValueError:
            raise InputError(f"bad --sizes value {s!r}") from None
        if len(t) != D:
            raise InputError(f"--sizes {s!r} needs {D} entries")
        out.append(t)
    if any(L < 1 for t in out for L in t):
        raise InputError("lattice sizes must be positive")
    return out


def _poly_arg(text: str, code: CodeDef):
    return parse_poly(text, code.D, code.field)


# ---------------------------------------------------------------------------
# commands


def cmd_check(args, cfg) -> tuple[Any, int]:
    name, D, q, sigma = _load_raw(args)
    res = check_commuting(sigma, q)
    out: dict[str, Any] = {"code": name, "commuting": res.commuting}
    if not res.commuting:
        i, j = res.witness
        out["witness"] = {"i": i, "j": j, "value": res.value.format()}
    return out, EXIT_OK if res.commuting else EXIT_NEGATIVE


def cmd_exactness(args, cfg):
    from .invariants import exactness_check
    code = _load_code(args)
    rep = exactness_check(code)
    return {"code": code.name, **rep.to_dict()}, EXIT_OK if rep.exact else EXIT_NEGATIVE


def cmd_chardim(args, cfg):
    from .invariants import associated_ideal, characteristic_dimension
    code = _load_code(args)
    gens = associated_ideal(code)
    return {"code": code.name, "ideal_generators": [g.format() for g in gens],
            "char_dim": characteristic_dimension(code)}, EXIT_OK


def _deg_job(payload):
    code_json, sizes, cell_limit, timing = payload
    from .lattice import degeneracy
    d = degeneracy(CodeDef.from_json(code_json), sizes, cell_limit).to_dict()
    if not timing:
        d.pop("elapsed_ms")
    return d


def _run_jobs(fn, payloads, jobs):
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, payloads))
    return [fn(p) for p in payloads]


def cmd_degeneracy(args, cfg):
    code = _load_code(args)
    sizes = _parse_sizes(args, code.D)
    if not sizes:
        raise InputError("give at least one --L or --sizes")
    payloads = [(code.to_json(), s, cfg.cell_limit, args.timing) for s in sizes]
    rows = _run_jobs(_deg_job, payloads, cfg.jobs)
    return rows if len(rows) > 1 else rows[0], EXIT_OK


def cmd_torsion(args, cfg):
    from .invariants import InvariantError, annihilator, find_period, torsion_submodule
    code = _load_code(args)
    rep = torsion_submodule(code)
    out = {"code": code.name, **rep.to_dict(), "period_L": None}
    if not rep.torsion_free:
        L = 1
        try:
            for v in rep.generators:
                L = lcm(L, find_period(annihilator(code, v), code.D, code.field))
            out["period_L"] = L
        except InvariantError:
            out["period_L"] = None
    return out, EXIT_OK


def cmd_fractal(args, cfg):
    from .invariants import find_fractal_generator, fractal_witness
    code = _load_code(args)
    if args.f:
        w = fractal_witness(code, _poly_arg(args.f, code))
    else:
        w = find_fractal_generator(code)
    out = {"code": code.name, "fractal": w.to_dict() if w else None}
    return out, EXIT_OK if w else EXIT_NEGATIVE


def cmd_classify1d(args, cfg):
    from .onedim import classify_1d
    code = _load_code(args)
    res = classify_1d(code)
    return {"code": code.name, **res.to_dict(with_transcript=args.transcript)}, EXIT_OK


def cmd_process(args, cfg):
    from .fractal import build_recipe, pgm_bitmap, simulate_energy, verify_barrier
    from .invariants import find_fractal_generator, fractal_witness
    code = _load_code(args)
    r_max = args.r_max if args.r_max is not None else cfg.r_max
    if args.f:
        w = fractal_witness(code, _poly_arg(args.f, code))
    else:
        w = find_fractal_generator(code)
    if w is None:
        return {"code": code.name, "fractal": None}, EXIT_NEGATIVE
    rep = verify_barrier(code, w.f, w.p, w.v, r_max)
    if args.pgm:
        if code.D != 2:
            raise InputError("--pgm needs a two-dimensional code")
        v_final = [w.f.frobenius(r_max) * a for a in w.v]
        nz = [a for a in v_final if a]
        lo = tuple(min(a.min_exps()[i] for a in nz) for i in range(2))
        hi = tuple(max(a.max_exps()[i] for a in nz) for i in range(2))
        for i, a in enumerate(v_final):
            Path(f"{args.pgm}_row{i + 1}.pgm").write_bytes(pgm_bitmap(a, lo, hi))
    if cfg.format == "csv":
        tr = simulate_energy(build_recipe(w.f, w.p, r_max), code)
        rows = [{"step": i, "energy": E} for i, E in enumerate(tr)]
        return rows, EXIT_OK if rep.ok else EXIT_NEGATIVE
    out = {"code": code.name, "fractal": w.to_dict(), **rep.to_dict()}
    return out, EXIT_OK if rep.ok else EXIT_NEGATIVE


def cmd_catalog(args, cfg):
    if args.action == "list":
        rows = []
        for n in catalog_names():
            c = catalog_get(n)
            rows.append({"name": n, "dimension": c.D, "qubits_per_site": c.q, "t": c.t,
                         "note": c.note})
        return rows, EXIT_OK
    if not args.name:
        raise InputError("catalog export needs a NAME")
    return catalog_get(args.name).to_dict(), EXIT_OK


def _oracle_sizes(code: CodeDef, bound: int) -> list[tuple[int, ...]]:
    """All size vectors with t * S <= bound (uniform and per-axis, each L <= bound)."""
    from itertools import product
    out = []
    maxL = max(1, bound // code.t)
    for s in product(range(1, maxL + 1), repeat=code.D):
        S = 1
        for L in s:
            S *= L
        if code.t * S <= bound:
            out.append(s)
    return out


def _oracle_job(payload):
    code_json, sizes, bound = payload
    from .lattice import brute_force_group_order, degeneracy_k
    c = CodeDef.from_json(code_json)
    k = degeneracy_k(c, sizes)
    b = brute_force_group_order(c, sizes, bound)
    return {"code": c.name, "sizes": list(sizes), "k_rank": k, "k_brute": b, "match": k == b}


def cmd_oracle(args, cfg):
    codes: list[CodeDef] = []
    if args.catalog or args.input:
        codes.append(_load_code(args))
    rng = random.Random(cfg.seed)
    for i in range(args.random):
        D = rng.randint(1, 2)
        q = rng.randint(1, 2)
        codes.append(random_commuting_code(D, q, rng))
    if not codes:
        raise InputError("give a code (--catalog/--input) and/or --random N")
    bound = min(args.bound or cfg.brute_bound, cfg.brute_bound)
    payloads = []
    for c in codes:
        sizes = _parse_sizes(args, c.D) if (args.L or args.sizes) else _oracle_sizes(c, bound)
        for s in sizes:
            payloads.append((c.to_json(), s, bound))
    rows = _run_jobs(_oracle_job, payloads, cfg.jobs)
    ok = all(r["match"] for r in rows)
    return rows, EXIT_OK if ok else EXIT_NEGATIVE


COMMANDS = {
    "check": cmd_check, "exactness": cmd_exactness, "chardim": cmd_chardim,
    "degeneracy": cmd_degeneracy, "fractal": cmd_fractal, "torsion": cmd_torsion,
    "classify1d": cmd_classify1d, "process": cmd_process, "catalog": cmd_catalog,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text", "csv"])
    common.add_argument("--seed", type=int)
    common.add_argument("--jobs", type=int)
    common.add_argument("--pair-cap", type=int)
    common.add_argument("--basis-cap", type=int)
    common.add_argument("--cell-limit", type=int)
    common.add_argument("--brute-bound", type=int)
    common.add_argument("--config", help="JSON file with RunConfig defaults")

    code_in = argparse.ArgumentParser(add_help=False)
    src = code_in.add_mutually_exclusive_group()
    src.add_argument("--catalog", metavar="NAME", help="built-in code")
    src.add_argument("--input", metavar="PATH", help="CodeDef JSON file ('-' for stdin)")

    sizes = argparse.ArgumentParser(add_help=False)
    sizes.add_argument("--L", type=int, action="append", help="uniform lattice size (repeatable)")
    sizes.add_argument("--sizes", action="append", help="per-axis sizes, e.g. 4,2,2 (repeatable)")

    p = argparse.ArgumentParser(prog="laurentcodes",
                                description="Invariants of translation-invariant Pauli codes.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common, code_in], help="commutation check")
    sub.add_parser("exactness", parents=[common, code_in], help="ker eps = im sigma?")
    sub.add_parser("chardim", parents=[common, code_in], help="associated ideal and its dimension")
    d = sub.add_parser("degeneracy", parents=[common, code_in, sizes],
                       help="k on periodic lattices")
    d.add_argument("--timing", action="store_true", help="include elapsed_ms (not reproducible)")
    f = sub.add_parser("fractal", parents=[common, code_in], help="find a fractal generator")
    f.add_argument("--f", help="test this polynomial instead of searching")
    sub.add_parser("torsion", parents=[common, code_in], help="torsion of coker eps")
    c = sub.add_parser("classify1d", parents=[common, code_in], help="1D Ising classification")
    c.add_argument("--transcript", action="store_true", help="include the move list")
    pr = sub.add_parser("process", parents=[common, code_in], help="fractal process energy barrier")
    pr.add_argument("--f", help="fractal generator to use")
    pr.add_argument("--r-max", type=int)
    pr.add_argument("--pgm", metavar="PREFIX", help="write final excitation bitmaps (D = 2)")
    cat = sub.add_parser("catalog", parents=[common], help="list or export built-in codes")
    cat.add_argument("action", choices=["list", "export"])
    cat.add_argument("name", nargs="?")
    o = sub.add_parser("oracle", parents=[common, code_in, sizes],
                       help="brute-force group order versus rank")
    o.add_argument("--random", type=int, default=0, help="also test N random commuting codes")
    o.add_argument("--bound", type=int, help="enumeration bound on t*S")
    return p


def _config(args) -> RunConfig:
    cfg = RunConfig.from_json(Path(args.config).read_text()) if args.config else RunConfig()
    for flag, name in (("format", "format"), ("seed", "seed"), ("jobs", "jobs"),
                       ("pair_cap", "pair_cap"), ("basis_cap", "basis_cap"),
                       ("cell_limit", "cell_limit"), ("brute_bound", "brute_bound")):
        val = getattr(args, flag, None)
        if val is not None:
            setattr(cfg, name, val)
    if getattr(args, "r_max", None) is not None:
        cfg.r_max = args.r_max
    cfg.validate()
    return cfg


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    from .fractal import ProcessError
    from .invariants import PeriodCapExceeded
    from .lattice import LatticeLimitExceeded
    try:
        cfg = _config(args)
        set_caps(cfg.pair_cap, cfg.basis_cap)
        result, code = COMMANDS[args.command](args, cfg)
    except (GroebnerCapExceeded, PeriodCapExceeded, LatticeLimitExceeded) as e:
        err.write(f"cap exceeded: {e}\n")
        return EXIT_CAP
    except (InputError, CodeError, ParseError, ProcessError, OSError, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    _emit(result, cfg.format, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
