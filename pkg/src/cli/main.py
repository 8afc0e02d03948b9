"""proxlaw command line: hub persistence analyses, pre-registration and extraction."""
import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import Settings, configure_logging, get_settings
from errors import ProxLawError
from . import __version__, commands
from .context import CommandContext

logger = logging.getLogger(__name__)

COUNTING_RULES = ["greater_or_equal", "strict_greater"]
MODES = ["sampled", "exhaustive"]
CRITERIA = ["legacy_directional", "thresholded_v2"]


def _add_stats_flags(parser: argparse.ArgumentParser, settings: Settings) -> None:
    stats = settings.stats
    parser.add_argument("--permutations", type=int, default=stats.n_permutations,
                        help=f"Permutations per test (default {stats.n_permutations})")
    parser.add_argument("--seed", type=int, default=stats.seed, help=f"Master seed (default {stats.seed})")
    parser.add_argument("--counting-rule", choices=COUNTING_RULES, default=stats.counting_rule)
    parser.add_argument("--mode", choices=MODES, default=stats.mode)
    parser.add_argument("--workers", type=int, default=stats.max_workers,
                        help="Threads evaluating permutation chunks; output does not depend on it")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="proxlaw", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="Machine-readable output on stdout")
    parser.add_argument("--manifest", type=Path, default=None, help="Write a run manifest to this path")
    parser.add_argument("--log-level", default=None, help=f"Logging level (default {settings.log_level})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="List every invariant violation of a graph document")
    p.add_argument("graph", type=Path)
    p.set_defaults(handler=commands.cmd_validate)

    p = sub.add_parser("hubs", help="Hub scores per layer")
    p.add_argument("graph", type=Path)
    p.add_argument("--layer", action="append", help="Restrict to this layer (repeatable)")
    p.add_argument("--weights", action="store_true", help="Weighted degree on weighted layers")
    p.add_argument("--module", default=None, help="Print this module's descending hub rank per layer")
    p.add_argument("--divergence", nargs=2, metavar=("LAYER_A", "LAYER_B"), default=None,
                   help="Per-node hub ranks in two layers, largest gap first")
    p.add_argument("--min-gap", type=float, default=0.0, help="With --divergence: hide smaller gaps")
    p.add_argument("--shadow", nargs=2, type=int, metavar=("TOP", "FLOOR"), default=None,
                   help="With --divergence: only nodes ranked <= TOP in LAYER_A and >= FLOOR in LAYER_B")
    p.set_defaults(handler=commands.cmd_hubs)

    p = sub.add_parser("persist", help="Hub persistence between two layers")
    p.add_argument("graph", type=Path)
    p.add_argument("layer_a")
    p.add_argument("layer_b")
    p.add_argument("--weights", action="store_true")
    _add_stats_flags(p, settings)
    p.set_defaults(handler=commands.cmd_persist)

    p = sub.add_parser("experiment", help="Run a similar-vs-dissimilar law test")
    p.add_argument("graph", type=Path)
    p.add_argument("config", type=Path)
    p.add_argument("--out", type=Path, default=None, help="Write the report JSON here")
    p.add_argument("--criterion", choices=CRITERIA, default=None, help="Override the config's criterion")
    p.add_argument("--workers", type=int, default=settings.stats.max_workers)
    p.set_defaults(handler=commands.cmd_experiment)

    p = sub.add_parser("check-report", help="Re-validate a report and re-derive its verdict")
    p.add_argument("report", type=Path)
    p.set_defaults(handler=commands.cmd_check_report)

    prereg = sub.add_parser("prereg", help="Pre-registration digests and ledger")
    prereg_sub = prereg.add_subparsers(dest="action", required=True)
    p = prereg_sub.add_parser("hash")
    p.add_argument("doc", type=Path)
    p.set_defaults(handler=commands.cmd_prereg_hash)
    p = prereg_sub.add_parser("register")
    p.add_argument("doc", type=Path)
    p.add_argument("--ledger", type=Path, default=None, help=f"Ledger file (default {settings.ledger})")
    p.set_defaults(handler=commands.cmd_prereg_register)
    p = prereg_sub.add_parser("verify")
    p.add_argument("doc", type=Path)
    p.add_argument("digest")
    p.add_argument("--legacy", action="store_true", help="Accept a 16-character truncated digest")
    p.set_defaults(handler=commands.cmd_prereg_verify)
    p = prereg_sub.add_parser("audit")
    p.add_argument("--ledger", type=Path, default=None)
    p.set_defaults(handler=commands.cmd_prereg_audit)

    extract = sub.add_parser("extract", help="Build layers from repository evidence")
    extract_sub = extract.add_subparsers(dest="action", required=True)
    p = extract_sub.add_parser("cochange")
    p.add_argument("log", type=Path, help="Output of git log --name-only --pretty=format:%%H%%x09%%ct")
    p.add_argument("--map", type=Path, default=None, help="ModuleMap JSON")
    p.add_argument("--bulk-threshold", type=int, default=None)
    p.add_argument("--name", default=None, help="Graph name")
    p.add_argument("--layer-name", default=None)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(handler=commands.cmd_extract_cochange)
    p = extract_sub.add_parser("imports")
    p.add_argument("source_root", type=Path)
    p.add_argument("--language", default="python", help="Registered pattern set")
    p.add_argument("--patterns", type=Path, default=None, help="Custom ImportPatternSet JSON")
    p.add_argument("--map", type=Path, default=None)
    p.add_argument("--name", default=None)
    p.add_argument("--layer-name", default=None)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(handler=commands.cmd_extract_imports)
    p = extract_sub.add_parser("coupling")
    p.add_argument("graph", type=Path, help="Graph holding the imports layer")
    p.add_argument("--layer", default=None, help="Imports layer name")
    p.add_argument("--name", default=None)
    p.add_argument("--layer-name", default=None)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(handler=commands.cmd_extract_coupling)
    p = extract_sub.add_parser("assemble")
    p.add_argument("name", help="Name of the assembled graph")
    p.add_argument("documents", type=Path, nargs="+")
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(handler=commands.cmd_extract_assemble)

    p = sub.add_parser("control", help="Seeded random multilayer control graph")
    p.add_argument("n_nodes", type=int)
    p.add_argument("n_layers", type=int)
    p.add_argument("edge_prob", type=float, nargs="?", default=0.25)
    p.add_argument("--seed", type=int, default=settings.stats.seed)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(handler=commands.cmd_control)

    p = sub.add_parser("binom", help="Exact P(X >= k) for X ~ Binomial(n, 1/2)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=commands.cmd_binom)

    p = sub.add_parser("roles", help="Cross-graph structural role similarity")
    p.add_argument("graph_a", type=Path)
    p.add_argument("graph_b", type=Path)
    p.add_argument("alignment", type=Path)
    p.add_argument("--threshold", type=float, default=None)
    p.add_argument("--weights", action="store_true")
    p.set_defaults(handler=commands.cmd_roles)

    p = sub.add_parser("replay-table", help="Replay the canonical evidence rows")
    p.add_argument("--tier-b", action="store_true", help="Include the external validation rows")
    p.set_defaults(handler=commands.cmd_replay_table)

    p = sub.add_parser("attr-corr", help="Pearson r between a node attribute and hub score")
    p.add_argument("graph", type=Path)
    p.add_argument("layer")
    p.add_argument("attribute")
    p.set_defaults(handler=commands.cmd_attr_corr)

    return parser


def _command_name(args: argparse.Namespace) -> str:
    action = getattr(args, "action", None)
    return f"{args.command} {action}" if action else args.command


async def _run(ctx: CommandContext) -> int:
    status = await ctx.args.handler(ctx)
    if ctx.args.manifest is not None:
        manifest = ctx.manifest(_command_name(ctx.args))
        await ctx.write_text(ctx.args.manifest, manifest.model_dump_json(indent=2) + "\n")
    return status


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    configure_logging(args.log_level or settings.log_level)

    ctx = CommandContext(args, settings)
    try:
        return asyncio.run(_run(ctx))
    except OSError as e:
        logger.error(f"{_command_name(args)} failed: {e}", exc_info=logger.isEnabledFor(logging.DEBUG))
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ProxLawError as e:
        logger.error(f"{_command_name(args)} failed: {type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
