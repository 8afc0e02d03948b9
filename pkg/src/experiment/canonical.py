"""Published evidence rows, kept as data for regression replays."""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .models import Tier, Verdict


@dataclass(frozen=True)
class CanonicalRow:
    domain: str
    similar_layers: str
    n: int
    r_sim: float
    r_dis: Optional[float]
    delta_r: Optional[float]
    rho_sim: Optional[float]
    p: Optional[float]
    verdict: Verdict
    tier: Tier
    # p is an upper bound ("< 0.001")
    p_upper_bound: bool = False
    # p comes from the analytical t-test, not permutations
    t_fallback: bool = False

    def replay_input(self) -> Tuple[float, float, float]:
        return self.r_sim, self.r_dis, self.p


C, D = Verdict.CONFIRMED, Verdict.DENIED

TIER_A_ROWS: List[CanonicalRow] = [
    CanonicalRow("Linux Kernel", "subsystem_calls<->data_structure", 30, 0.703, -0.145, 0.848, 0.574, 0.002, C, Tier.A),
    CanonicalRow("Human Brain Connectome", "structural<->functional", 16, 0.703, 0.178, 0.525, None, 0.004, C, Tier.A),
    CanonicalRow("Internet AS Topology", "transit_dependency<->peering", 18, 0.516, -0.267, 0.783, None, 0.026, C,
                 Tier.A),
    CanonicalRow("CPU Block Design", "signal_dependency<->power_domain", 10, 0.622, -0.649, 1.271, None, 0.030, C,
                 Tier.A),
    CanonicalRow("Ecology (weighted)", "predation<->competition", 15, 0.559, -0.065, 0.624, None, 0.034, C, Tier.A),
    CanonicalRow("Cytokine Cascade", "activates<->co_elevated", 18, 0.512, -0.408, 0.920, None, 0.030, C, Tier.A,
                 t_fallback=True),
    CanonicalRow("p53 Network", "physical_interaction<->functional_association", 15, 0.973, -0.161, 1.134, None,
                 0.001, C, Tier.A, p_upper_bound=True, t_fallback=True),
    CanonicalRow("English Lexical Network", "co_occurrence<->syntactic_class", 20, 0.276, -0.748, 1.024, None, 0.241,
                 C, Tier.A),
    CanonicalRow("Software (real git)", "imports<->structural_coupling", 14, 0.941, -0.304, 1.245, None, 0.001, C,
                 Tier.A, p_upper_bound=True, t_fallback=True),
    CanonicalRow("Finance 2008", "derivatives<->direct_credit", 16, 0.042, 0.183, -0.141, None, 0.824, D, Tier.A),
    CanonicalRow("Psychiatry", "co_occurrence<->temporal_cascade", 20, 0.769, 0.808, -0.039, None, 0.002, D, Tier.A),
    CanonicalRow("Mathematics", "formal_containment<->proof_usage", 20, 0.105, 0.280, -0.175, None, 0.705, D, Tier.A),
]

TIER_B_ROWS: List[CanonicalRow] = [
    CanonicalRow("Flask", "imports<->structural_coupling", 14, 0.666, 0.494, 0.172, None, 0.015, C, Tier.B),
    CanonicalRow("C. elegans connectome", "chemical_synapse<->gap_junction", 15, 0.777, None, None, None, 0.004, C,
                 Tier.B),
    CanonicalRow("WordPress", "function_coupling<->co_change", 25, 0.516, 0.241, 0.275, None, 0.012, C, Tier.B),
    CanonicalRow("Next.js", "import_graph<->test_coupling", 25, 0.900, 0.549, 0.351, None, 0.002, C, Tier.B),
    # hub-rank identity between two frameworks; no permutation test at n=6
    CanonicalRow("Flask<->Express transfer", "hub_rank_identity", 6, 1.000, None, None, None, None, C, Tier.B),
]


def canonical_rows(include_tier_b: bool = False) -> List[CanonicalRow]:
    return TIER_A_ROWS + (TIER_B_ROWS if include_tier_b else [])
