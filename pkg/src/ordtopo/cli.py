"""Command line front end: space files, reports, and the random search.

Space file format, whitespace-insensitive, ``#`` starts a comment:

    poset <n>        header; carrier is 0..n-1
    i < j            one strict pair per line, 0-based; closure is taken

or a single header line ``cofinite`` for the symbolic cofinite space.

Output is either human-readable lines or line-delimited JSON records with
the stable fields {command, instance, key, value[, witness]}.  All output
is a pure function of the inputs, the flags, and the seed.  The exit code
is 0 when no theorem report failed, 1 otherwise, 2 on usage or parse
errors.
"""

import argparse
import json
import sys
from dataclasses import dataclass, replace

import numpy as np

from .catalog import random_poset
from .classify import FAIL, THEOREMS, classify, verify_theorems
from .errors import (
    CapExceededError,
    OrderError,
    SpaceFileError,
    UnsupportedOperationError,
)
from .poset import FinPoset
from .powerspace import hoare, smyth, xi_map, eta_map
from .reflect import CofiniteReflection, sobrification, wf_reflection
from .space import DEFAULT_CAPS, CofiniteSpace, FiniteSpace, as_space, enumerate_families


@dataclass(frozen=True)
class RunConfig:
    caps: object = DEFAULT_CAPS
    seed: int = 0
    suite: tuple = None  # None means every registered theorem
    fmt: str = "human"


# ---------------------------------------------------------------------------
# space files


def parse_space_text(text):
    """Parse the space file format from a string; errors carry line numbers."""
    lines = []
    for num, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((num, body))
    if not lines:
        raise SpaceFileError("empty space file", 1)
    num, header = lines[0]
    fields = header.split()
    if fields[0] == "cofinite":
        if len(fields) != 1:
            raise SpaceFileError("the cofinite header takes no arguments", num)
        if len(lines) > 1:
            raise SpaceFileError(
                "unexpected content after the cofinite header", lines[1][0]
            )
        return CofiniteSpace()
    if fields[0] != "poset":
        raise SpaceFileError(f"unknown header {fields[0]!r}", num)
    if len(fields) != 2 or not fields[1].isdigit():
        raise SpaceFileError("expected 'poset <n>'", num)
    n = int(fields[1])
    leq = np.eye(n, dtype=bool)
    seen = set()
    for num, body in lines[1:]:
        parts = body.split("<")
        if len(parts) != 2:
            raise SpaceFileError(f"expected 'i < j', got {body!r}", num)
        a, b = parts[0].strip(), parts[1].strip()
        if not (a.isdigit() and b.isdigit()):
            raise SpaceFileError(f"expected 'i < j', got {body!r}", num)
        i, j = int(a), int(b)
        if not (0 <= i < n and 0 <= j < n):
            raise SpaceFileError(f"index out of range in {body!r}", num)
        if (i, j) in seen:
            raise SpaceFileError(f"duplicate pair {body!r}", num)
        seen.add((i, j))
        if i == j or leq[j, i]:
            # the closing edge of a cycle is blamed, not its earlier pieces
            raise SpaceFileError(f"pair {body!r} closes a cycle", num)
        below = np.flatnonzero(leq[:, i])
        above = np.flatnonzero(leq[j])
        leq[np.ix_(below, above)] = True
    return FiniteSpace(FinPoset(leq))


def parse_space_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpaceFileError(f"cannot read {path}: {exc.strerror}", 0)
    return parse_space_text(text)


def serialize_space(space):
    """Emit the space in the input format; parsing it back is an identity
    on the relation (cover pairs only, closure restored at load)."""
    space = as_space(space)
    if space.kind == "cofinite":
        return "cofinite\n"
    p = space.poset
    out = [f"poset {p.n}"]
    for i in range(p.n):
        for j in range(p.n):
            if i == j or not p.le(i, j):
                continue
            if any(p.le(i, k) and p.le(k, j) for k in range(p.n) if k not in (i, j)):
                continue  # not a cover
            out.append(f"{i} < {j}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# report plumbing


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    describe = getattr(obj, "describe", None)
    if callable(describe):
        return describe()
    return str(obj)


class _Reporter:
    def __init__(self, command, instance, fmt):
        self.command = command
        self.instance = instance
        self.fmt = fmt
        self.lines = []

    def emit(self, key, value, witness=None, instance=None):
        if self.fmt == "records":
            rec = {
                "command": self.command,
                "instance": instance or self.instance,
                "key": key,
                "value": _jsonable(value),
            }
            if witness is not None:
                rec["witness"] = _jsonable(witness)
            self.lines.append(json.dumps(rec, sort_keys=True, separators=(",", ":")))
        else:
            line = f"{key}: {_jsonable(value)}"
            if witness is not None:
                line += f"  [witness: {_jsonable(witness)}]"
            self.lines.append(line)


def _instance_name(path):
    name = path.replace("\\", "/").rsplit("/", 1)[-1]
    return name[:-len(".space")] if name.endswith(".space") else name


# ---------------------------------------------------------------------------
# commands


def _cmd_classify(space, rep, config):
    result = classify(space, config.caps)
    rep.emit("kind", result.kind)
    for name, value in result.vector.as_dict().items():
        rep.emit(name, value, witness=result.witnesses.get(name))
    return 0


def _cmd_families(space, rep, config):
    fams = enumerate_families(space, config.caps)
    for key, fam in (
        ("irr_c", fams.irr_c),
        ("sc", fams.sc),
        ("dc", fams.dc),
        ("k", fams.k),
    ):
        if space.kind == "cofinite":
            rep.emit(key, fam.describe())
        else:
            rep.emit(key, [space.describe(m) for m in fam])
            rep.emit(f"{key}.count", len(fam))
    return 0


def _cmd_powerspace(space, rep, config, variant):
    if variant == "smyth":
        ps = smyth(space, config.caps)
        embed = xi_map(space, ps, config.caps)
        rep.emit("order", "reverse inclusion")
    else:
        ps = hoare(space, "closed", caps=config.caps)
        embed = eta_map(space, ps, config.caps)
        rep.emit("order", "inclusion")
    rep.emit("carrier", [space.describe(m) for m in ps.carrier])
    rep.emit("carrier.count", ps.space.n)
    rep.emit("embedding", list(embed))
    return 0


def _cmd_reflect(space, rep, config, which):
    if which == "sober":
        refl = sobrification(space, config.caps)
    else:
        refl = wf_reflection(space, config.caps)
    if isinstance(refl, CofiniteReflection):
        rep.emit("carrier", refl.carrier_description)
        rep.emit("added_points", refl.added_points)
        rep.emit("new_point_is_top", refl.new_point_is_top)
        rep.emit("reflected_sober", refl.reflected_sober)
        rep.emit("reflected_well_filtered", refl.reflected_well_filtered)
        rep.emit("matches_sobrification", refl.matches_sobrification)
        return 0
    rep.emit("carrier", [space.describe(m) for m in refl.reflected.carrier])
    rep.emit("eta", list(refl.eta))
    rep.emit("reflected_sober", refl.reflected_sober)
    rep.emit("reflected_well_filtered", refl.reflected_well_filtered)
    rep.emit("homeo_to_original", refl.homeo_to_original)
    if refl.iso is not None:
        rep.emit("iso", list(refl.iso))
    return 0


def _emit_reports(rep, reports):
    failed = 0
    for r in reports:
        witness = r.witness if r.verdict == FAIL else None
        value = r.verdict if not r.detail else f"{r.verdict} ({r.detail})"
        rep.emit(r.theorem_id, value, witness=witness)
        failed += r.verdict == FAIL
    return failed


def _cmd_verify(space, rep, config):
    reports = verify_theorems(space, config.suite, config.caps)
    failed = _emit_reports(rep, reports)
    rep.emit("failed", failed)
    return 1 if failed else 0


def _cmd_search(rep, config, count, max_n):
    rng = np.random.default_rng(config.seed)
    failures = 0
    passes = 0
    for i in range(count):
        poset = random_poset(rng, max_n)
        instance = f"random-{config.seed}-{i}"
        reports = verify_theorems(poset, config.suite, config.caps)
        clean = True
        for r in reports:
            if r.verdict == FAIL:
                clean = False
                failures += 1
                rep.emit(
                    r.theorem_id,
                    "fail",
                    witness={
                        "space": serialize_space(poset).strip(),
                        "witness": r.witness,
                    },
                    instance=instance,
                )
        passes += clean
    rep.emit("instances", count)
    rep.emit("passes", passes)
    rep.emit("failures", failures)
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument handling


def _build_parser():
    top = argparse.ArgumentParser(
        prog="ordtopo",
        description="order-topology workbench: classification, power spaces, "
        "reflections, and brute-force theorem checks",
    )
    top.add_argument("--seed", type=int, default=0)
    top.add_argument("--cap-carrier", type=int, default=None)
    top.add_argument("--cap-powerspace", type=int, default=None)
    top.add_argument("--suite", default="all", help="comma-separated theorem ids")
    top.add_argument("--format", choices=("human", "records"), default="human")
    sub = top.add_subparsers(dest="command", required=True)

    for name in ("classify", "families", "verify"):
        p = sub.add_parser(name)
        p.add_argument("file")
    p = sub.add_parser("powerspace")
    p.add_argument("variant", choices=("smyth", "hoare"))
    p.add_argument("file")
    p = sub.add_parser("reflect")
    p.add_argument("which", choices=("sober", "wf"))
    p.add_argument("file")
    p = sub.add_parser("search")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-n", type=int, default=5)
    return top


def _config_from(args):
    caps = DEFAULT_CAPS
    if args.cap_carrier is not None:
        if args.cap_carrier <= 0:
            raise OrderError("--cap-carrier must be positive")
        caps = replace(caps, max_carrier=args.cap_carrier)
    if args.cap_powerspace is not None:
        if args.cap_powerspace <= 0:
            raise OrderError("--cap-powerspace must be positive")
        caps = replace(caps, max_powerspace=args.cap_powerspace)
    if args.suite == "all":
        suite = None
    else:
        suite = tuple(s for s in args.suite.split(",") if s)
        unknown = [s for s in suite if s not in THEOREMS]
        if unknown:
            raise OrderError(
                f"unknown theorem ids {unknown}; known: {sorted(THEOREMS)}"
            )
    return RunConfig(caps=caps, seed=args.seed, suite=suite, fmt=args.format)


def run_command(argv):
    """Run one CLI invocation; returns (exit code, output lines)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), []
    try:
        config = _config_from(args)
        if args.command == "search":
            rep = _Reporter("search", f"seed-{config.seed}", config.fmt)
            code = _cmd_search(rep, config, args.count, args.max_n)
            return code, rep.lines
        space = parse_space_file(args.file)
        rep = _Reporter(args.command, _instance_name(args.file), config.fmt)
        if args.command == "classify":
            code = _cmd_classify(space, rep, config)
        elif args.command == "families":
            code = _cmd_families(space, rep, config)
        elif args.command == "powerspace":
            rep = _Reporter(
                f"powerspace-{args.variant}", _instance_name(args.file), config.fmt
            )
            code = _cmd_powerspace(space, rep, config, args.variant)
        elif args.command == "reflect":
            rep = _Reporter(
                f"reflect-{args.which}", _instance_name(args.file), config.fmt
            )
            code = _cmd_reflect(space, rep, config, args.which)
        else:
            code = _cmd_verify(space, rep, config)
        return code, rep.lines
    except (SpaceFileError, OrderError, CapExceededError, UnsupportedOperationError) as exc:
        return 2, [f"error: {exc}"]


def main(argv=None):
    code, lines = run_command(sys.argv[1:] if argv is None else argv)
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
