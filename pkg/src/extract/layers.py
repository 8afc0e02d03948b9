import logging
import posixpath
from collections import Counter, defaultdict
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Set

from errors import BadLayerKind
from graph_core.assembly import assemble_graph
from graph_core.models import Edge, GrammarClass, Layer, MultilayerGraph
from .gitlog import CommitRecord
from .module_map import ModuleMap
from .patterns import ImportPatternSet

logger = logging.getLogger(__name__)

COCHANGE_LAYER = "co_change"
IMPORTS_LAYER = "imports"
COUPLING_LAYER = "structural_coupling"


def build_cochange_layer(
    commits: Iterable[CommitRecord],
    module_map: ModuleMap,
    bulk_threshold: int = 30,
    name: str = COCHANGE_LAYER,
) -> Layer:
    """Undirected weighted d3 layer: weight of {a, b} = number of kept commits touching both."""
    counts: Counter = Counter()
    skipped = 0
    for commit in commits:
        modules = sorted(module_map.modules_of(commit.files))
        if len(modules) > bulk_threshold:
            skipped += 1
            logger.warning(f"Skipping bulk commit {commit.commit_id}: {len(modules)} modules > {bulk_threshold}")
            continue
        counts.update(combinations(modules, 2))

    edges = [Edge(src=a, dst=b, weight=float(count)) for (a, b), count in sorted(counts.items())]
    logger.info(f"Co-change layer '{name}': {len(edges)} edges ({skipped} bulk commits skipped)")
    return Layer(name=name, directed=False, weighted=True, grammar_class=GrammarClass.D3_BEHAVIORAL, edges=edges)


class _SourceIndex:
    """
    Resolves import targets to the module owning the source file they name.

    Relative targets (leading dots for dotted languages, ``./`` or ``../``
    otherwise) are joined to the importing file's directory. Other targets
    match any source path ending with them. A target that names no source
    file yields no module, whatever the ModuleMap default would make of it.
    """

    def __init__(self, paths: Iterable[str], module_map: ModuleMap):
        self.module_map = module_map
        self.paths: Set[str] = {p.replace("\\", "/") for p in paths}
        self.by_suffix: Dict[str, str] = {}
        for path in sorted(self.paths):
            parts = path.split("/")
            for start in range(len(parts)):
                self.by_suffix.setdefault("/".join(parts[start:]), path)
        self.known_modules: Set[str] = self.module_map.modules_of(self.paths)

    def _module_for(self, path: Optional[str]) -> Optional[str]:
        if path is None:
            return None
        module = self.module_map.module_of(path)
        return module if module in self.known_modules else None

    def _exact(self, stem: str, patterns: ImportPatternSet) -> Optional[str]:
        stem = posixpath.normpath(stem)
        if stem.startswith("../") or stem == "..":
            return None
        for candidate in [stem + ext for ext in patterns.extensions] + [stem]:
            if candidate in self.paths:
                return candidate
        return None

    def _relative(self, token: str, patterns: ImportPatternSet, source_path: str) -> Optional[str]:
        directory = posixpath.dirname(source_path.replace("\\", "/"))
        if patterns.separator == "/":
            return self._exact(posixpath.join(directory, token), patterns)
        dots = len(token) - len(token.lstrip(patterns.separator))
        for _ in range(dots - 1):
            directory = posixpath.dirname(directory)
        names = [part for part in token[dots:].split(patterns.separator) if part]
        # the last name may be an attribute of its module or package rather than a module itself
        while names:
            path = self._exact(posixpath.join(directory, *names), patterns)
            if path is not None:
                return path
            names.pop()
        return self._exact(posixpath.join(directory, "__init__"), patterns)

    def _is_relative(self, token: str, patterns: ImportPatternSet) -> bool:
        if patterns.separator == "/":
            return token.startswith("./") or token.startswith("../")
        return token.startswith(patterns.separator)

    def resolve(self, token: str, patterns: ImportPatternSet, source_path: str = "") -> Optional[str]:
        if self._is_relative(token, patterns):
            return self._module_for(self._relative(token, patterns, source_path))
        stem = token.lstrip("./")
        if patterns.separator != "/":
            stem = stem.replace(patterns.separator, "/")
        if not stem:
            return None
        for candidate in [stem + ext for ext in patterns.extensions] + [stem]:
            module = self._module_for(self.by_suffix.get(candidate))
            if module is not None:
                return module
        return None


def source_modules(sources: Mapping[str, str], module_map: ModuleMap) -> List[str]:
    """Modules that own at least one of the given source files, sorted."""
    return sorted(module_map.modules_of(sources))


def scan_imports(
    sources: Mapping[str, str],
    patterns: ImportPatternSet,
    module_map: ModuleMap,
    name: str = IMPORTS_LAYER,
) -> Layer:
    """Directed unweighted d1 layer of module-level import edges; intra-module and unresolved targets dropped."""
    index = _SourceIndex(sources.keys(), module_map)
    found: Set[tuple] = set()
    unresolved = 0
    for path in sorted(sources):
        src_module = module_map.module_of(path)
        if src_module is None:
            continue
        for line in sources[path].splitlines():
            for token in patterns.targets(line):
                dst_module = index.resolve(token, patterns, path)
                if dst_module is None:
                    unresolved += 1
                    continue
                if dst_module != src_module:
                    found.add((src_module, dst_module))

    if unresolved:
        logger.debug(f"{unresolved} import target(s) did not resolve to a known module")
    edges = [Edge(src=a, dst=b) for a, b in sorted(found)]
    logger.info(f"Import layer '{name}' ({patterns.language_label}): {len(edges)} edges "
                f"over {len(index.known_modules)} modules")
    return Layer(name=name, directed=True, weighted=False, grammar_class=GrammarClass.D1_DECLARED, edges=edges)


def build_structural_coupling(imports: Layer, name: str = COUPLING_LAYER) -> Layer:
    """Undirected unweighted d2 layer: {a, b} iff a and b import at least one common target."""
    if not imports.directed or imports.grammar_class is not GrammarClass.D1_DECLARED:
        raise BadLayerKind(
            f"Structural coupling needs a directed d1 layer; '{imports.name}' is "
            f"{'directed' if imports.directed else 'undirected'} "
            f"{imports.grammar_class.value if imports.grammar_class else 'untagged'}",
            element=imports.name,
        )
    out: Dict[str, Set[str]] = defaultdict(set)
    for edge in imports.edges:
        out[edge.src].add(edge.dst)

    edges = [Edge(src=a, dst=b) for a, b in combinations(sorted(out), 2) if out[a] & out[b]]
    logger.info(f"Structural coupling '{name}' from '{imports.name}': {len(edges)} edges")
    return Layer(name=name, directed=False, weighted=False, grammar_class=GrammarClass.D2_STRUCTURAL, edges=edges)


def merge_layer_documents(name: str, graphs: Iterable[MultilayerGraph]) -> MultilayerGraph:
    """One graph carrying every layer of ``graphs`` over the sorted union of their nodes."""
    graphs = list(graphs)
    nodes = {}
    for graph in graphs:
        for node in graph.nodes:
            nodes.setdefault(node.id, node)
    layers = [layer for graph in graphs for layer in graph.layers]
    return assemble_graph(name, layers, nodes=[nodes[node_id] for node_id in sorted(nodes)])
