"""Command line interface.

Exit status: 0 success / claim holds, 1 usage or parse error, 2 hypothesis
not met, 3 counterexample found, 4 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .core import ArcPartition, validate
from .cycles import CycleEnumerationLimit, DEFAULT_MAX_CYCLES
from .errors import Counterexample, HKernelError, HypothesisViolation, InvalidArgument, ResourceLimitError
from .harness import (
    CLAIMS,
    STRATEGIES,
    CampaignConfig,
    GeneratorParams,
    Status,
    generate_instance,
    run_campaign,
    verify_claim,
)
from .io import read_instance, serialize_instance
from .kernel import (
    DEFAULT_SIZE_GUARD,
    find_h_kernels_bruteforce,
    find_kernels_bruteforce,
    h_kernel_via_closure,
    kernel_constructive_symmetric,
)
from .rainbow import find_rainbow
from .reach import h_closure
from .semikernel import (
    DEFAULT_SEMIKERNEL_GUARD,
    build_semikernel_digraph,
    chase_witnesses,
    derive_partition_corollary,
    enumerate_h_semikernels,
    h_kernel_via_theorem4,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_RESOURCE = 4

_STATUS_EXIT = {
    Status.HOLDS: EXIT_OK,
    Status.HYPOTHESIS_NOT_MET: EXIT_HYPOTHESIS,
    Status.COUNTEREXAMPLE: EXIT_COUNTEREXAMPLE,
    Status.RESOURCE_LIMIT: EXIT_RESOURCE,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage, which would read as "hypothesis not met"
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Usage(Exception):
    pass


def _fmt_set(s) -> str:
    return "{" + ", ".join(sorted(s)) + "}"


def _limit(args) -> CycleEnumerationLimit:
    return CycleEnumerationLimit(max_cycles=args.limit_cycles)


def _guard(args, default: int) -> int:
    return args.limit_vertices if args.limit_vertices is not None else default


def _load(args):
    return read_instance(args.file)


def _need_partition(partition: ArcPartition | None, blocks: int | None = 2) -> ArcPartition:
    if partition is None:
        raise _Usage("this command needs an instance with a `blocks` declaration")
    if blocks is not None and len(partition) != blocks:
        raise _Usage(f"this command needs {blocks} blocks, the file declares {len(partition)}")
    return partition


def cmd_validate(args) -> tuple[int, dict[str, Any], str]:
    instance, _ = _load(args)
    report = validate(instance)
    doc = {"ok": report.ok, "violations": [{"kind": v.kind, "detail": v.detail} for v in report.violations]}
    return (EXIT_OK if report.ok else EXIT_USAGE), doc, str(report)


def cmd_closure(args):
    instance, _ = _load(args)
    closure = h_closure(instance)
    arcs = closure.sorted_arcs
    if args.dot:
        text = "digraph closure {\n" + "".join(f"  {a} -> {b};\n" for a, b in arcs) + "}"
    else:
        text = "\n".join(f"{a} {b}" for a, b in arcs)
    return EXIT_OK, {"arcs": [list(a) for a in arcs]}, text


def cmd_kernel(args):
    instance, _ = _load(args)
    if args.constructive:
        K = kernel_constructive_symmetric(instance.host)
        return EXIT_OK, {"kernel": sorted(K)}, _fmt_set(K)
    if args.via_closure:
        K = h_kernel_via_closure(instance, _limit(args), force=args.force)
        return EXIT_OK, {"h_kernel": sorted(K)}, _fmt_set(K)
    ks = find_kernels_bruteforce(instance.host, _guard(args, DEFAULT_SIZE_GUARD))
    return EXIT_OK, {"kernels": [sorted(k) for k in ks]}, "\n".join(_fmt_set(k) for k in ks) or "no kernel"


def cmd_h_kernel(args):
    instance, _ = _load(args)
    ks = find_h_kernels_bruteforce(instance, _guard(args, DEFAULT_SIZE_GUARD))
    return EXIT_OK, {"h_kernels": [sorted(k) for k in ks]}, "\n".join(_fmt_set(k) for k in ks) or "no H-kernel"


def cmd_semikernel(args):
    instance, partition = _load(args)
    partition = _need_partition(partition)
    guard = _guard(args, DEFAULT_SEMIKERNEL_GUARD)
    if args.enumerate:
        sks = enumerate_h_semikernels(instance, partition, guard)
        return EXIT_OK, {"semikernels": [sorted(s) for s in sks]}, "\n".join(_fmt_set(s) for s in sks)
    if args.digraph:
        sdg = build_semikernel_digraph(instance, partition, guard)
        lines = [f"{sdg.label(i)} -> {sdg.label(j)}" for i, j in sorted(sdg.arcs)]
        doc = {"nodes": [sorted(s) for s in sdg.nodes], "arcs": sorted([list(a) for a in sdg.arcs]),
               "acyclic": sdg.is_acyclic()}
        text = f"{len(sdg.nodes)} semikernels, {len(sdg.arcs)} arcs, acyclic={sdg.is_acyclic()}"
        return EXIT_OK, doc, "\n".join([text] + lines)
    chase = chase_witnesses(instance, partition, _limit(args), force=args.force)
    return EXIT_OK, {"semikernel": chase.result, "chase": list(chase.vertices)}, \
        f"{chase.result} (chase {'->'.join(chase.vertices)})"


def cmd_theorem4(args):
    instance, partition = _load(args)
    partition = _need_partition(partition)
    K = h_kernel_via_theorem4(instance, partition, _guard(args, DEFAULT_SEMIKERNEL_GUARD), _limit(args),
                              force=args.force)
    return EXIT_OK, {"h_kernel": sorted(K)}, _fmt_set(K)


def cmd_corollary(args):
    instance, blocks = _load(args)
    blocks = _need_partition(blocks, blocks=None)
    derived = derive_partition_corollary(instance, blocks, args.mode, _limit(args), force=args.force)
    K = h_kernel_via_theorem4(instance, derived, _guard(args, DEFAULT_SEMIKERNEL_GUARD), _limit(args),
                              force=args.force)
    doc = {"e1": sorted([list(a) for a in derived.e1]), "e2": sorted([list(a) for a in derived.e2]),
           "h_kernel": sorted(K)}
    return EXIT_OK, doc, f"{_fmt_set(K)}\n--- derived partition ---\n{serialize_instance(instance, derived)}"


def cmd_rainbow(args):
    instance, _ = _load(args)
    found = {k: find_rainbow(instance, k) for k in ("C3", "P3")}
    doc = {k: (None if w is None else {"walk": list(w.walk.vertices), "colours": list(w.colours)})
           for k, w in found.items()}
    doc["rainbow_free"] = all(w is None for w in found.values())
    text = "\n".join(f"{k}: {w if w else 'none'}" for k, w in found.items())
    return EXIT_OK, doc, text


def cmd_check(args):
    instance, partition = _load(args)
    verdict = verify_claim(instance, partition, args.claim, _limit(args))
    text = f"{verdict.claim}: {verdict.status.value}" + (f" - {verdict.detail}" if verdict.detail else "")
    if verdict.witness is not None:
        text += "\n--- witness ---\n" + verdict.witness["instance"]
    return _STATUS_EXIT[verdict.status], verdict.to_dict(), text


def cmd_gen(args):
    params = GeneratorParams(
        n_vertices=args.n, n_colours=args.colours, arc_probability=args.p, pattern_density=args.density,
        strategy=args.strategy, seed=args.seed, partition_blocks=args.blocks,
        partition_mode=args.partition_mode)
    g = generate_instance(params)
    text = serialize_instance(g.instance, g.partition)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        text = f"wrote {args.output} after {g.attempts} draw(s)"
    return EXIT_OK, {"attempts": g.attempts, "document": serialize_instance(g.instance, g.partition)}, text.rstrip("\n")


def cmd_campaign(args):
    with open(args.config, encoding="utf-8") as fh:
        doc = json.load(fh)
    if args.seed is not None:
        doc["seed"] = args.seed
    if args.workers is not None:
        doc["workers"] = args.workers
    report = run_campaign(CampaignConfig.from_dict(doc))
    if args.report_out:
        with open(args.report_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(report.to_json() + "\n")
    code = EXIT_COUNTEREXAMPLE if report.found_counterexample else EXIT_OK
    return code, report.to_dict(), report.to_text()


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json-out", metavar="PATH", help="also write a machine-readable result document")
    common.add_argument("--limit-cycles", type=int, default=DEFAULT_MAX_CYCLES, metavar="N",
                        help="maximum number of simple cycles to enumerate (default: %(default)s)")
    common.add_argument("--limit-vertices", type=int, default=None, metavar="N",
                        help="vertex-count guard for brute-force searches")
    common.add_argument("--force", action="store_true",
                        help="skip hypothesis checks (recorded in the output)")

    p = _Parser(prog="hkernel", description="Kernels by H-walks in arc-coloured digraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, file=True):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if file:
            sp.add_argument("file", help="instance file (hcd format)")
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "report broken instance invariants")
    sp = add("closure", cmd_closure, "print the H-closure arc list")
    sp.add_argument("--dot", action="store_true", help="emit a dot digraph instead of an edge list")
    sp = add("kernel", cmd_kernel, "classical kernels of D, or an H-kernel via the closure")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--brute", action="store_true", help="all kernels of D by brute force (default)")
    g.add_argument("--constructive", action="store_true", help="greedy kernel when every cycle has a symmetric arc")
    g.add_argument("--via-closure", action="store_true", help="H-kernel from a kernel of the H-closure")
    add("h-kernel", cmd_h_kernel, "all H-kernels by brute force")
    sp = add("semikernel", cmd_semikernel, "H-semikernels modulo E1 (needs a 2-block partition)")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--singleton", action="store_true", help="witness chase for a singleton (default)")
    g.add_argument("--enumerate", action="store_true", help="all nonempty semikernels")
    g.add_argument("--digraph", action="store_true", help="the semikernel digraph")
    add("theorem4", cmd_theorem4, "H-kernel as a sink of the semikernel digraph")
    sp = add("corollary", cmd_corollary, "derive (E1, E2) from a bipartite closure, then run theorem4")
    sp.add_argument("--mode", choices=("bipartite", "strong-no-odd"), default="bipartite")
    add("rainbow", cmd_rainbow, "find rainbow C3 / P3 subdigraphs")
    sp = add("check", cmd_check, "verify one claim on one instance")
    sp.add_argument("--claim", choices=CLAIMS, required=True)
    sp = add("gen", cmd_gen, "generate a random instance", file=False)
    sp.add_argument("--n", type=int, default=5, help="number of vertices")
    sp.add_argument("--colours", type=int, default=2)
    sp.add_argument("--p", type=float, default=0.4, help="arc probability")
    sp.add_argument("--density", type=float, default=0.5, help="pattern arc probability")
    sp.add_argument("--strategy", choices=STRATEGIES, default="uniform")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--blocks", type=int, default=0, help="draw a partition with this many blocks")
    sp.add_argument("--partition-mode", choices=("independent", "respecting"), default="independent")
    sp.add_argument("-o", "--output", help="write the instance here instead of stdout")
    sp = add("campaign", cmd_campaign, "run a verification campaign from a JSON config", file=False)
    sp.add_argument("config", help="campaign config (JSON)")
    sp.add_argument("--seed", type=int, default=None, help="override the config seed")
    sp.add_argument("--workers", type=int, default=None)
    sp.add_argument("--report-out", metavar="PATH", help="write the full JSON report here")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    doc: dict[str, Any]
    try:
        code, result, text = args.fn(args)
        doc = {"status": "ok" if code == EXIT_OK else "not-ok", "result": result}
    except _Usage as exc:
        code, text, doc = EXIT_USAGE, f"error: {exc}", {"status": "usage-error", "error": str(exc)}
    except HypothesisViolation as exc:
        code, text = EXIT_HYPOTHESIS, f"hypothesis not met: {exc}"
        doc = {"status": "hypothesis-not-met", "error": str(exc), "failed": list(exc.failed)}
    except Counterexample as exc:
        code, text = EXIT_COUNTEREXAMPLE, f"COUNTEREXAMPLE: {exc}"
        doc = {"status": "counterexample", "error": str(exc), "instance": exc.document()}
        if exc.document():
            text += "\n--- witness ---\n" + exc.document()
    except ResourceLimitError as exc:
        code, text = EXIT_RESOURCE, f"resource limit: {exc}"
        doc = {"status": "resource-limit", "error": str(exc), "bound": exc.bound}
    except (InvalidArgument, HKernelError, OSError, json.JSONDecodeError) as exc:
        code, text, doc = EXIT_USAGE, f"error: {exc}", {"status": "usage-error", "error": str(exc)}
    doc["command"] = args.command
    doc["exit_code"] = code
    doc["forced"] = bool(getattr(args, "force", False))
    if doc["forced"]:
        text += "\n(hypothesis checks skipped: --force)"
    print(text.rstrip("\n"))
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
