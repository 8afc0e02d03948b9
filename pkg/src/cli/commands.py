import json
import logging
from pathlib import Path
from typing import Dict, Optional

import pandas as pd

from errors import SchemaError
from experiment import (
    ExperimentConfig,
    ExperimentReport,
    TIER_A_ROWS,
    TIER_B_ROWS,
    Verdict,
    persistence,
    replay_table,
    run_experiment,
    summarize_evidence,
)
from extract import (
    ImportPatternSet,
    ModuleMap,
    PatternSetRegistry,
    build_cochange_layer,
    build_structural_coupling,
    merge_layer_documents,
    parse_git_log,
    scan_imports,
    source_modules,
)
from graph_core import (
    MultilayerGraph,
    Node,
    assemble_graph,
    generate_random_control,
    parse_graph,
    parse_graph_schema,
    serialize_graph,
    validate,
)
from metrics import attr_degree_correlation, hub_rank, hub_shadows, hub_table, rank_divergence
from prereg import HypothesisDoc, audit_ledger, digest, record_to_json, register, verify
from stats import binom_tail
from transfer import Alignment, compare_graphs
from .context import CommandContext, parse_model

logger = logging.getLogger(__name__)


async def _load_graph(ctx: CommandContext, path: Path) -> MultilayerGraph:
    return parse_graph(await ctx.read_text(path))


async def _write_or_emit(ctx: CommandContext, out: Optional[Path], text: str) -> None:
    if out is not None:
        await ctx.write_text(out, text)
    else:
        ctx.emit(text)


async def cmd_validate(ctx: CommandContext) -> int:
    graph = parse_graph_schema(await ctx.read_text(ctx.args.graph))
    violations = validate(graph)
    if ctx.as_json:
        ctx.emit_json({
            "graph": graph.name,
            "valid": not violations,
            "violations": [{"kind": v.kind, "element": v.element, "message": v.message} for v in violations],
        })
    else:
        for violation in violations:
            ctx.emit(str(violation))
    return 1 if violations else 0


async def cmd_hubs(ctx: CommandContext) -> int:
    graph = await _load_graph(ctx, ctx.args.graph)
    if ctx.args.divergence:
        return _emit_divergence(ctx, graph)
    table = hub_table(graph, layers=ctx.args.layer or (), use_weights=ctx.args.weights)
    if ctx.args.module:
        ranks = {name: hub_rank(graph, name, ctx.args.module,
                                use_weights=ctx.args.weights and graph.layer(name).weighted)
                 for name in table.columns}
        if ctx.as_json:
            ctx.emit_json({"module": ctx.args.module, "ranks": ranks})
        else:
            for name, rank in ranks.items():
                ctx.emit(f"{ctx.args.module} rank in {name}: {rank:g}")
        return 0
    if ctx.as_json:
        ctx.emit_json({"graph": graph.name, "nodes": list(table.index),
                       "layers": {name: list(table[name]) for name in table.columns}})
    else:
        ctx.emit(table.to_string())
    return 0


def _emit_divergence(ctx: CommandContext, graph: MultilayerGraph) -> int:
    args = ctx.args
    layer_a, layer_b = args.divergence
    rows = rank_divergence(graph, layer_a, layer_b, use_weights=args.weights)
    if args.shadow:
        rows = hub_shadows(rows, top=args.shadow[0], floor=args.shadow[1])
    rows = [row for row in rows if abs(row.gap) >= args.min_gap]
    if ctx.as_json:
        ctx.emit_json({"graph": graph.name, "layer_a": layer_a, "layer_b": layer_b,
                       "nodes": [{"node": row.node, "rank_a": row.rank_a, "rank_b": row.rank_b, "gap": row.gap}
                                 for row in rows]})
        return 0
    if not rows:
        ctx.emit("(no divergent nodes)")
        return 0
    frame = pd.DataFrame([{"node": row.node, "rank_a": row.rank_a, "rank_b": row.rank_b, "gap": row.gap}
                          for row in rows])
    ctx.emit(f"rank_a: {layer_a}  rank_b: {layer_b}")
    ctx.emit(frame.to_string(index=False, float_format=lambda v: f"{v:g}"))
    return 0


async def cmd_persist(ctx: CommandContext) -> int:
    args = ctx.args
    graph = await _load_graph(ctx, args.graph)
    result = persistence(
        graph, args.layer_a, args.layer_b,
        use_weights=args.weights,
        n_permutations=args.permutations,
        seed=args.seed,
        mode=args.mode,
        counting_rule=args.counting_rule,
        max_workers=args.workers,
    )
    if ctx.as_json:
        ctx.emit_json(result.model_dump(mode="json"))
        return 0
    ctx.emit(f"layers: {result.layer_a} <-> {result.layer_b} (n={result.n})")
    ctx.emit(f"r={result.r:.4f} rho={result.rho:.4f}")
    ctx.emit(f"p_permutation={result.p_permutation:.4f} "
             f"(count {result.count_exceeding}, permutations={args.permutations} seed={args.seed}, "
             f"{args.counting_rule})")
    t_text = "saturated" if result.t_saturated else (f"{result.t:.3f}" if result.t is not None else "n/a")
    ctx.emit(f"p_t_fallback={result.p_t_fallback:.4g} (t={t_text})")
    return 0


async def _experiment_config(ctx: CommandContext, path: Path) -> ExperimentConfig:
    text = await ctx.read_text(path)
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: not a JSON document: {e}", element=str(path)) from e
    if not isinstance(document, dict):
        return parse_model(json.dumps(document), ExperimentConfig, str(path))
    # settings fill in whatever the config document leaves out
    defaults = {
        "n_permutations": ctx.settings.stats.n_permutations,
        "seed": ctx.settings.stats.seed,
        "mode": ctx.settings.stats.mode,
        "counting_rule": ctx.settings.stats.counting_rule,
        "criterion": ctx.settings.experiment.criterion,
        "delta_r_floor": ctx.settings.experiment.delta_r_floor,
        "alpha": ctx.settings.experiment.alpha,
    }
    merged = {**defaults, **document}
    if ctx.args.criterion:
        merged["criterion"] = ctx.args.criterion
    return parse_model(json.dumps(merged), ExperimentConfig, str(path))


async def cmd_experiment(ctx: CommandContext) -> int:
    graph = await _load_graph(ctx, ctx.args.graph)
    config = await _experiment_config(ctx, ctx.args.config)
    report = run_experiment(graph, config, clock=ctx.settings.now_utc, max_workers=ctx.args.workers)
    report_json = report.model_dump_json(indent=2) + "\n"
    if ctx.args.out is not None:
        await ctx.write_text(ctx.args.out, report_json)
    if ctx.as_json:
        ctx.emit(report_json)
        return 0
    ctx.emit(f"graph: {graph.name} (n={graph.n}, criterion={config.criterion.value})")
    ctx.emit(f"similar    {report.sim.layer_a} <-> {report.sim.layer_b}: r={report.sim.r:+.3f} "
             f"rho={report.sim.rho:+.3f} p={report.p_verdict:.4f}")
    ctx.emit(f"dissimilar {report.dis.layer_a} <-> {report.dis.layer_b}: r={report.dis.r:+.3f} "
             f"rho={report.dis.rho:+.3f}")
    ctx.emit(f"delta_r: {report.delta_r:+.3f}")
    if report.min_abs_r_met is not None:
        ctx.emit(f"min_abs_r met: {str(report.min_abs_r_met).lower()}")
    ctx.emit(f"verdict: {report.verdict.value}")
    return 0


async def cmd_check_report(ctx: CommandContext) -> int:
    report = await ctx.read_model(ctx.args.report, ExperimentReport)
    if ctx.as_json:
        ctx.emit_json({"valid": True, "verdict": report.verdict.value, "delta_r": report.delta_r})
    else:
        ctx.emit(f"report ok: verdict {report.verdict.value} (delta_r={report.delta_r:+.3f})")
    return 0


async def cmd_prereg_hash(ctx: CommandContext) -> int:
    doc = await ctx.read_model(ctx.args.doc, HypothesisDoc)
    value = digest(doc)
    if ctx.as_json:
        ctx.emit_json({"experiment_id": doc.experiment_id, "digest": value})
    else:
        ctx.emit(value)
    return 0


async def cmd_prereg_register(ctx: CommandContext) -> int:
    doc = await ctx.read_model(ctx.args.doc, HypothesisDoc)
    ledger = ctx.args.ledger or ctx.settings.ledger
    record = await register(doc, Path(ledger), clock=ctx.settings.now_utc)
    if ctx.as_json:
        ctx.emit(record_to_json(record))
    else:
        ctx.emit(f"registered {doc.experiment_id} as record {record.ledger_index}: {record.digest}")
    return 0


async def cmd_prereg_verify(ctx: CommandContext) -> int:
    doc = await ctx.read_model(ctx.args.doc, HypothesisDoc)
    verified = verify(doc, ctx.args.digest, legacy=ctx.args.legacy)
    if ctx.as_json:
        ctx.emit_json({"experiment_id": doc.experiment_id, "verified": verified})
    else:
        ctx.emit(f"verified: {str(verified).lower()}")
    return 0 if verified else 1


async def cmd_prereg_audit(ctx: CommandContext) -> int:
    ledger = Path(ctx.args.ledger or ctx.settings.ledger)
    bad = await audit_ledger(ledger)
    if ctx.as_json:
        ctx.emit_json({"ledger": str(ledger), "tampered": bad})
    elif bad:
        ctx.emit(f"tampered records: {', '.join(str(index) for index in bad)}")
    else:
        ctx.emit("ledger ok")
    return 1 if bad else 0


async def _module_map(ctx: CommandContext) -> ModuleMap:
    if ctx.args.map is None:
        return ModuleMap()
    return await ctx.read_model(ctx.args.map, ModuleMap)


async def cmd_extract_cochange(ctx: CommandContext) -> int:
    args = ctx.args
    commits = parse_git_log(await ctx.read_text(args.log))
    module_map = await _module_map(ctx)
    threshold = args.bulk_threshold or ctx.settings.extract.bulk_threshold
    layer = build_cochange_layer(commits, module_map, bulk_threshold=threshold,
                                 name=args.layer_name or ctx.settings.extract.cochange_layer)
    # an empty log yields a graph with no nodes; validate reports it as EmptyGraph
    graph = assemble_graph(args.name or Path(args.log).stem, [layer])
    await _write_or_emit(ctx, args.out, serialize_graph(graph))
    return 0


async def _read_sources(ctx: CommandContext, root: Path, patterns: ImportPatternSet) -> Dict[str, str]:
    paths = sorted({path for glob in patterns.source_globs for path in Path(root).rglob(glob) if path.is_file()})
    sources = {}
    for path in paths:
        sources[path.relative_to(root).as_posix()] = await ctx.read_text(path)
    logger.info(f"Collected {len(sources)} {patterns.language_label} source files under {root}")
    return sources


async def cmd_extract_imports(ctx: CommandContext) -> int:
    args = ctx.args
    if args.patterns is not None:
        patterns = await ctx.read_model(args.patterns, ImportPatternSet)
    else:
        patterns = PatternSetRegistry.get_pattern_set(args.language)
    module_map = await _module_map(ctx)
    sources = await _read_sources(ctx, args.source_root, patterns)
    layer = scan_imports(sources, patterns, module_map, name=args.layer_name or ctx.settings.extract.imports_layer)
    nodes = [Node(id=module) for module in source_modules(sources, module_map)]
    graph = assemble_graph(args.name or Path(args.source_root).resolve().name, [layer], nodes=nodes)
    await _write_or_emit(ctx, args.out, serialize_graph(graph))
    return 0


async def cmd_extract_coupling(ctx: CommandContext) -> int:
    args = ctx.args
    source = await _load_graph(ctx, args.graph)
    imports = source.layer(args.layer or ctx.settings.extract.imports_layer)
    layer = build_structural_coupling(imports, name=args.layer_name or ctx.settings.extract.coupling_layer)
    graph = assemble_graph(args.name or source.name, [layer], nodes=source.nodes)
    await _write_or_emit(ctx, args.out, serialize_graph(graph))
    return 0


async def cmd_extract_assemble(ctx: CommandContext) -> int:
    args = ctx.args
    graphs = [await _load_graph(ctx, path) for path in args.documents]
    merged = merge_layer_documents(args.name, graphs)
    violations = validate(merged)
    if violations:
        raise violations[0].to_error()
    await _write_or_emit(ctx, args.out, serialize_graph(merged))
    return 0


async def cmd_control(ctx: CommandContext) -> int:
    args = ctx.args
    graph = generate_random_control(args.n_nodes, args.n_layers, edge_prob=args.edge_prob, seed=args.seed)
    await _write_or_emit(ctx, args.out, serialize_graph(graph))
    return 0


async def cmd_binom(ctx: CommandContext) -> int:
    tail = binom_tail(ctx.args.k, ctx.args.n)
    if ctx.as_json:
        ctx.emit_json({"k": tail.k, "n": tail.n, "numerator": str(tail.numerator),
                       "denominator": str(tail.denominator), "p_float": tail.p_float})
    else:
        ctx.emit(str(tail))
    return 0


async def cmd_roles(ctx: CommandContext) -> int:
    args = ctx.args
    graph_a = await _load_graph(ctx, args.graph_a)
    graph_b = await _load_graph(ctx, args.graph_b)
    alignment = await ctx.read_model(args.alignment, Alignment)
    threshold = args.threshold if args.threshold is not None else ctx.settings.experiment.structural_match_threshold
    table = compare_graphs(graph_a, graph_b, alignment, threshold=threshold, use_weights=args.weights)
    if ctx.as_json:
        ctx.emit(table.model_dump_json(indent=2))
    else:
        ctx.emit(table.to_text())
    return 0


def replay_dataframe(include_tier_b: bool) -> pd.DataFrame:
    rows = TIER_A_ROWS
    replayed = replay_table(row.replay_input() for row in rows)
    frame = pd.DataFrame({
        "domain": [row.domain for row in rows],
        "n": [row.n for row in rows],
        "r_sim": [row.r_sim for row in rows],
        "r_dis": [row.r_dis for row in rows],
        "delta_r": [item.delta_r for item in replayed],
        "published": [row.delta_r for row in rows],
        "p": [f"<{row.p:g}" if row.p_upper_bound else f"{row.p:g}" for row in rows],
        "verdict": [item.verdict.value for item in replayed],
        "tier": [row.tier.value for row in rows],
    })
    if include_tier_b:
        frame = pd.concat([frame, pd.DataFrame({
            "domain": [row.domain for row in TIER_B_ROWS],
            "n": [row.n for row in TIER_B_ROWS],
            "r_sim": [row.r_sim for row in TIER_B_ROWS],
            "r_dis": [row.r_dis for row in TIER_B_ROWS],
            "delta_r": [row.delta_r for row in TIER_B_ROWS],
            "published": [row.delta_r for row in TIER_B_ROWS],
            "p": ["-" if row.p is None else f"{row.p:g}" for row in TIER_B_ROWS],
            "verdict": [row.verdict.value for row in TIER_B_ROWS],
            "tier": [row.tier.value for row in TIER_B_ROWS],
        })], ignore_index=True)
    return frame


async def cmd_replay_table(ctx: CommandContext) -> int:
    frame = replay_dataframe(ctx.args.tier_b)
    summaries = [("tier A", summarize_evidence([Verdict(v) for v in frame[frame["tier"] == "A"]["verdict"]]))]
    if ctx.args.tier_b:
        summaries.append(("tier B", summarize_evidence([Verdict(v) for v in frame[frame["tier"] == "B"]["verdict"]])))
        summaries.append(("tier A+B", summarize_evidence([Verdict(v) for v in frame["verdict"]])))
    if ctx.as_json:
        ctx.emit_json({
            "rows": json.loads(frame.to_json(orient="records")),
            "evidence": {label: {"confirmed": s.confirmed, "total": s.total, "numerator": str(s.tail.numerator),
                                 "denominator": str(s.tail.denominator), "p_float": s.tail.p_float}
                         for label, s in summaries},
        })
        return 0
    ctx.emit(frame.to_string(index=False, na_rep="-"))
    for label, summary in summaries:
        ctx.emit(f"{label}: {summary}")
    return 0


async def cmd_attr_corr(ctx: CommandContext) -> int:
    args = ctx.args
    graph = await _load_graph(ctx, args.graph)
    result = attr_degree_correlation(graph, args.layer, args.attribute)
    if ctx.as_json:
        ctx.emit_json({"layer": args.layer, "attribute": args.attribute, "r": result.r, "n": result.n})
    else:
        ctx.emit(f"r={result.r:.4f} (n={result.n}, {args.attribute} vs hub score in {args.layer})")
    return 0

