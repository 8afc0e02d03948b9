import logging
from datetime import datetime, timezone
from typing import Callable, Optional

from errors import ConfigMismatch
from graph_core.models import MultilayerGraph
from metrics import degree_vector, pearson, spearman
from stats import CountingRule, PermutationMode, permutation_test, t_test_p
from .models import ExperimentConfig, ExperimentReport, LayerPair, PairResult
from .verdict import classify_verdict

logger = logging.getLogger(__name__)

TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M:%SZ"

Clock = Callable[[], datetime]


def utc_now() -> datetime:
    return datetime.now(timezone.utc)


def check_config(graph: MultilayerGraph, config: ExperimentConfig) -> None:
    if config.graph_name != graph.name:
        raise ConfigMismatch(f"Config targets graph '{config.graph_name}' but graph is '{graph.name}'",
                             element=config.graph_name)
    known = set(graph.layer_names)
    for pair in (config.similar, config.dissimilar):
        for name in (pair.layer_a, pair.layer_b):
            if name not in known:
                raise ConfigMismatch(f"Layer '{name}' ({pair.classification.value} pair) not in graph '{graph.name}'",
                                     element=name)


def persistence(
    graph: MultilayerGraph,
    layer_a: str,
    layer_b: str,
    use_weights: bool = False,
    n_permutations: int = 200,
    seed: int = 42,
    mode: PermutationMode = PermutationMode.SAMPLED,
    counting_rule: CountingRule = CountingRule.GREATER_OR_EQUAL,
    use_permutation: bool = True,
    max_workers: int = 1,
) -> PairResult:
    """Hub persistence between two layers: Pearson, Spearman, permutation p and t-fallback p."""
    a = degree_vector(graph, layer_a, use_weights=use_weights)
    b = degree_vector(graph, layer_b, use_weights=use_weights)
    r = pearson(a, b).r
    rho = spearman(a, b).r
    t_result = t_test_p(r, graph.n) if graph.n >= 3 else None

    p_permutation = None
    count = None
    if use_permutation:
        perm = permutation_test(a, b, n_permutations=n_permutations, seed=seed, mode=mode,
                                counting_rule=counting_rule, max_workers=max_workers)
        p_permutation = perm.p_value
        count = perm.count_exceeding

    logger.debug(f"Pair {layer_a}<->{layer_b}: r={r:.4f} rho={rho:.4f} p_perm={p_permutation}")
    return PairResult(
        layer_a=layer_a,
        layer_b=layer_b,
        r=r,
        rho=rho,
        p_permutation=p_permutation,
        count_exceeding=count,
        # with two nodes the t statistic has no degrees of freedom
        p_t_fallback=t_result.p_two_tailed if t_result else 1.0,
        t=None if t_result is None or t_result.saturated else t_result.t,
        t_saturated=bool(t_result and t_result.saturated),
        n=graph.n,
    )


def analyse_pair(graph: MultilayerGraph, pair: LayerPair, config: ExperimentConfig,
                 max_workers: int = 1) -> PairResult:
    return persistence(graph, pair.layer_a, pair.layer_b, use_weights=config.use_weights,
                       n_permutations=config.n_permutations, seed=config.seed, mode=config.mode,
                       counting_rule=config.counting_rule, use_permutation=config.use_permutation,
                       max_workers=max_workers)


def run_experiment(
    graph: MultilayerGraph,
    config: ExperimentConfig,
    clock: Optional[Clock] = None,
    max_workers: int = 1,
) -> ExperimentReport:
    """Similar pair vs dissimilar pair; deterministic given (graph, config) apart from the timestamp."""
    check_config(graph, config)
    sim = analyse_pair(graph, config.similar, config, max_workers=max_workers)
    dis = analyse_pair(graph, config.dissimilar, config, max_workers=max_workers)

    delta_r = sim.r - dis.r
    p_verdict = sim.p_permutation if config.use_permutation else sim.p_t_fallback
    verdict = classify_verdict(delta_r, p_verdict, config.criterion, config.delta_r_floor, config.alpha)
    min_abs_r_met = None
    if config.min_abs_r is not None:
        min_abs_r_met = abs(sim.r) >= config.min_abs_r

    stamp = (clock or utc_now)().astimezone(timezone.utc).strftime(TIMESTAMP_FORMAT)
    report = ExperimentReport(
        config=config,
        sim=sim,
        dis=dis,
        delta_r=delta_r,
        p_verdict=p_verdict,
        verdict=verdict,
        sign_agreement=(sim.r > 0) == (sim.rho > 0) and (sim.r < 0) == (sim.rho < 0),
        min_abs_r_met=min_abs_r_met,
        tier=config.tier,
        timestamp_utc=stamp,
    )
    logger.info(f"Experiment on '{graph.name}': r_sim={sim.r:.3f} r_dis={dis.r:.3f} "
                f"delta_r={delta_r:+.3f} p={p_verdict:.4f} -> {verdict.value} ({config.criterion.value})")
    return report
