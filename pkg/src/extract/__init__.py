from .gitlog import CommitRecord, parse_git_log
from .module_map import ModuleMap, ModuleRule, UnmatchedPolicy
from .patterns import PHP, PYTHON, TYPESCRIPT, ImportPatternSet, PatternSetRegistry, load_pattern_set
from .layers import (
    COCHANGE_LAYER,
    COUPLING_LAYER,
    IMPORTS_LAYER,
    build_cochange_layer,
    build_structural_coupling,
    merge_layer_documents,
    scan_imports,
    source_modules,
)

__all__ = [
    "CommitRecord", "parse_git_log",
    "ModuleMap", "ModuleRule", "UnmatchedPolicy",
    "PHP", "PYTHON", "TYPESCRIPT", "ImportPatternSet", "PatternSetRegistry", "load_pattern_set",
    "COCHANGE_LAYER", "COUPLING_LAYER", "IMPORTS_LAYER",
    "build_cochange_layer", "build_structural_coupling", "merge_layer_documents", "scan_imports",
    "source_modules",
]
