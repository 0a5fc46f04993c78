"""
Commands - One function per CLI subcommand.

Each command turns parsed arguments into a CommandOutput; the runner in
``cli.main`` formats it, records it and maps errors to exit codes.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from config.settings import get_settings
from core.errors import InputParseError, TooShort
from core.sequence import validate
from counting import compare_with_published, count_table
from drawing import (
    TopViewCaterpillar,
    draw_caterpillar,
    export_svg,
    path_tree,
    required_points,
    straight_through_path,
    validate_drawing,
)
from greedy import half_rollercoaster, k_sweep
from input_handlers import PointsHandler, SequenceHandler, read_text
from longest import longest_rollercoaster, longest_rollercoaster_perm
from memory import input_digest
from oracle import count_bruteforce, longest_exhaustive, longest_quadratic_dp
from utils import make_rng, random_permutation, random_point_set

logger = logging.getLogger(__name__)


@dataclass
class CommandOutput:
    """What a command produced, before formatting."""
    payload: Dict[str, Any]
    text: str
    digest: str
    tsv: Optional[str] = None
    svg: Optional[str] = None
    validation: Optional[bool] = None
    problems: List[str] = field(default_factory=list)


@dataclass
class LoadedSequence:
    values: List[int]
    digest: str
    source: str


def load_sequence(args) -> LoadedSequence:
    """Sequence from --input, or a seeded random permutation of size --n."""
    if args.input:
        text = read_text(args.input)
        result = SequenceHandler().process_text(text)
        return LoadedSequence(result.values, input_digest(text), args.input)
    if args.n is None:
        raise InputParseError("either --input or --n is required")
    values = random_permutation(args.n, make_rng(args.seed))
    return LoadedSequence(values, input_digest(f"permutation:{args.n}:{args.seed}"), "random")


def load_points(args, count: int):
    if args.input:
        text = read_text(args.input)
        result = PointsHandler().process_text(text, source=args.input)
        return result.points, input_digest(text)
    points = random_point_set(count, make_rng(args.seed))
    return points, input_digest(f"points:{count}:{args.seed}")


def _indices_text(indices) -> str:
    return " ".join(str(i) for i in indices)


def _rollercoaster_output(name: str, loaded: LoadedSequence, rc, check: bool,
                          minimum: Optional[int] = None, min_run: int = 3) -> CommandOutput:
    values = loaded.values
    if rc is None:
        payload = {"n": len(values), "length": 0, "indices": [], "values": []}
        return CommandOutput(payload, "none", loaded.digest, tsv="length\t0",
                             validation=True if check else None)
    picked = rc.values(values)
    payload = {"n": len(values), "length": len(rc), "indices": list(rc.indices), "values": picked}
    text = f"length {len(rc)}\nindices {_indices_text(rc.indices)}\nvalues {_indices_text(picked)}"
    tsv = "\n".join(f"{i}\t{v}" for i, v in zip(rc.indices, picked))
    out = CommandOutput(payload, text, loaded.digest, tsv=tsv)
    if check:
        problems = []
        if not validate(values, rc.indices, min_run):
            problems.append(f"{name}: output is not a valid rollercoaster (min run {min_run})")
        if minimum is not None and len(rc) < minimum:
            problems.append(f"{name}: length {len(rc)} is below the guaranteed {minimum}")
        out.validation = not problems
        out.problems = problems
    return out


def cmd_greedy(args) -> CommandOutput:
    loaded = load_sequence(args)
    rc = half_rollercoaster(loaded.values)
    n = len(loaded.values)
    minimum = (n + 1) // 2 if n >= 8 else 3
    return _rollercoaster_output("greedy", loaded, rc, args.validate, minimum=minimum)


def cmd_longest(args) -> CommandOutput:
    loaded = load_sequence(args)
    return _rollercoaster_output("longest", loaded, longest_rollercoaster(loaded.values), args.validate)


def cmd_longest_perm(args) -> CommandOutput:
    loaded = load_sequence(args)
    rc = longest_rollercoaster_perm(loaded.values)
    return _rollercoaster_output("longest-perm", loaded, rc, args.validate)


def cmd_kroller(args) -> CommandOutput:
    loaded = load_sequence(args)
    result = k_sweep(loaded.values, args.k)
    out = _rollercoaster_output("kroller", loaded, result.rollercoaster, args.validate,
                                minimum=result.guaranteed_bound, min_run=args.k)
    out.payload.update({"k": args.k, "guaranteed_bound": result.guaranteed_bound,
                        "sharper_bound": result.sharper_bound,
                        "iterations": len(result.states)})
    return out


def cmd_count(args) -> CommandOutput:
    if args.n is None:
        raise InputParseError("count needs --n")
    digest = input_digest(f"count:{args.n}:{args.table}")
    if args.table:
        rows = count_table(args.n)
        payload = {"rows": [r.to_dict() for r in rows]}
        lines = ["n\tr\tratio"]
        for r in rows:
            ratio = "" if r.ratio is None else f"{r.ratio:.6f}"
            lines.append(f"{r.n}\t{r.count}\t{ratio}")
        text = "\n".join(lines)
        return CommandOutput(payload, text, digest, tsv=text)

    computed, published, matches = compare_with_published(args.n)
    payload = {"n": args.n, "r": computed, "published": published, "matches_published": matches}
    out = CommandOutput(payload, str(computed), digest, tsv=f"{args.n}\t{computed}")
    if args.validate and args.n <= get_settings().bruteforce_max_n:
        brute = count_bruteforce(args.n)
        out.validation = brute == computed
        if brute != computed:
            out.problems = [f"count: automaton gives {computed}, enumeration gives {brute}"]
    return out


def cmd_oracle(args) -> CommandOutput:
    """Brute force: counting with --n alone, longest search with --input."""
    if not args.input:
        if args.n is None:
            raise InputParseError("oracle needs --input or --n")
        r = count_bruteforce(args.n)
        digest = input_digest(f"oracle-count:{args.n}")
        return CommandOutput({"n": args.n, "r": r}, str(r), digest, tsv=f"{args.n}\t{r}")

    loaded = load_sequence(args)
    dp = longest_quadratic_dp(loaded.values)
    payload = {"n": len(loaded.values), "quadratic_dp": len(dp) if dp else 0}
    if len(loaded.values) <= get_settings().exhaustive_max_n:
        payload["exhaustive"] = longest_exhaustive(loaded.values)
    text = "\n".join(f"{k} {v}" for k, v in payload.items())
    out = CommandOutput(payload, text, loaded.digest,
                        tsv="\n".join(f"{k}\t{v}" for k, v in payload.items()))
    if args.validate:
        fast = longest_rollercoaster(loaded.values)
        lengths = {payload["quadratic_dp"], len(fast) if fast else 0}
        if "exhaustive" in payload:
            lengths.add(payload["exhaustive"])
        out.validation = len(lengths) == 1
        if not out.validation:
            out.problems = [f"oracle: longest lengths disagree: {sorted(lengths)}"]
    return out


def _drawing_output(drawing, tree, points, digest, extra: Dict[str, Any], check: bool) -> CommandOutput:
    payload = dict(extra)
    payload["drawing"] = drawing.to_dict()
    lines = [f"{k} {v}" for k, v in extra.items()]
    lines += [f"{v} {p[0]} {p[1]}" for v, p in drawing.vertices.items()]
    tsv = "\n".join(f"{v}\t{p[0]}\t{p[1]}" for v, p in drawing.vertices.items())
    out = CommandOutput(payload, "\n".join(lines), digest, tsv=tsv, svg=export_svg(drawing, points))
    if check:
        report = validate_drawing(drawing, tree, points)
        out.validation = report.ok
        out.problems = [f"{v.kind}: {v.detail}" for v in report.violations]
        payload["validation"] = report.to_dict()
    return out


def cmd_draw_path(args) -> CommandOutput:
    if args.input:
        points, digest = load_points(args, 0)
        n = args.n if args.n is not None else (len(points) + 3) // 3
    else:
        if args.n is None:
            raise InputParseError("draw-path needs --input or --n")
        n = args.n
        if n < 2:
            raise TooShort(f"a path drawing needs n >= 2, got {n}")
        points, digest = load_points(args, 3 * n - 3)
    drawing = straight_through_path(points, n)
    return _drawing_output(drawing, path_tree(n), points, digest,
                           {"n": n, "points": len(points)}, args.validate)


def cmd_draw_cat(args) -> CommandOutput:
    if args.n is not None:
        caterpillar = TopViewCaterpillar.from_vertex_count(args.n)
        points, digest = load_points(args, required_points(caterpillar))
    elif args.input:
        points, digest = load_points(args, 0)
        caterpillar = TopViewCaterpillar(len(points) // 25)
    else:
        raise InputParseError("draw-cat needs --input or --n")
    result = draw_caterpillar(points, caterpillar)
    extra = {
        "n": caterpillar.n,
        "spine": caterpillar.spine_len,
        "points": len(points),
        "five_sets": result.five_set_count,
        "five_sets_consumed": result.five_sets_consumed,
        "steps": len(result.steps),
    }
    out = _drawing_output(result.drawing, result.tree, points, digest, extra, args.validate)
    out.payload["case_log"] = [s.to_dict() for s in result.steps]
    return out


COMMANDS = {
    "greedy": cmd_greedy,
    "longest": cmd_longest,
    "longest-perm": cmd_longest_perm,
    "kroller": cmd_kroller,
    "count": cmd_count,
    "draw-path": cmd_draw_path,
    "draw-cat": cmd_draw_cat,
    "oracle": cmd_oracle,
}
