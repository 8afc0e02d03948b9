import json
import logging

from pydantic import ValidationError

from errors import SchemaError
from storage.backends.istorage_backend import IStorageBackend
from .models import MultilayerGraph
from .validation import validate

logger = logging.getLogger(__name__)


def parse_graph_schema(text: str) -> MultilayerGraph:
    """Schema-level parse only; invariants are left to :func:`validate`."""
    try:
        return MultilayerGraph.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ())) or "<document>"
        raise SchemaError(f"Malformed graph document at {where}: {first.get('msg')}", element=where) from e


def parse_graph(text: str) -> MultilayerGraph:
    """Parse and fully validate a graph document; raises the first violation found."""
    graph = parse_graph_schema(text)
    violations = validate(graph)
    if violations:
        logger.warning(f"Graph '{graph.name}' failed validation with {len(violations)} violation(s)")
        raise violations[0].to_error()
    logger.debug(f"Parsed graph '{graph.name}' with n={graph.n}, k={graph.k}")
    return graph


def graph_to_dict(graph: MultilayerGraph) -> dict:
    return graph.model_dump(mode="json")


def serialize_graph(graph: MultilayerGraph) -> str:
    """Stable UTF-8 JSON rendering; ``parse_graph(serialize_graph(g)) == g``."""
    return json.dumps(graph_to_dict(graph), indent=2, ensure_ascii=False) + "\n"


async def load_graph(backend: IStorageBackend, identifier: str) -> MultilayerGraph:
    return parse_graph(await backend.load_text(identifier))


async def save_graph(backend: IStorageBackend, identifier: str, graph: MultilayerGraph) -> None:
    await backend.save_text(identifier, serialize_graph(graph))
    logger.info(f"Saved graph '{graph.name}' to {identifier}")
