import logging
import re
from functools import lru_cache
from typing import Dict, List, Pattern

from pydantic import BaseModel, ConfigDict, Field, field_validator

from errors import BadParameter

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _compile(text: str) -> Pattern:
    return re.compile(text)


class ImportPatternSet(BaseModel):
    """
    Line-level import recognisers for one language.

    Every pattern is matched from the start of a line (``re.match``) and must
    define a ``target`` group holding the imported name or path. A target may
    list several names separated by commas. A pattern may also define a
    ``names`` group: when its target is only separators (``from . import x``)
    each listed name is appended to it as a target of its own. ``separator``
    is the language's module path separator; ``extensions`` are tried in
    order when resolving a target to a source file.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    language_label: str = Field(..., min_length=1)
    line_patterns: List[str] = Field(..., min_length=1)
    separator: str = "/"
    extensions: List[str] = Field(default_factory=list)
    # files the CLI collects when scanning a source tree
    source_globs: List[str] = Field(default_factory=lambda: ["*"])

    @field_validator("line_patterns")
    @classmethod
    def _has_target_group(cls, value: List[str]) -> List[str]:
        for text in value:
            try:
                pattern = _compile(text)
            except re.error as e:
                raise ValueError(f"pattern {text!r} does not compile: {e}") from e
            if "target" not in pattern.groupindex:
                raise ValueError(f"pattern {text!r} has no named group 'target'")
        return value

    def targets(self, line: str) -> List[str]:
        """Imported tokens named on one source line."""
        found = []
        for text in self.line_patterns:
            match = _compile(text).match(line)
            if not match or not match.group("target"):
                continue
            target = match.group("target")
            names = match.groupdict().get("names")
            if names and not target.strip(self.separator):
                found.extend(target + name for name in _split_names(names))
                continue
            found.extend(_split_names(target))
        return found


def _split_names(text: str) -> List[str]:
    """Comma-separated names with any ``as`` alias dropped."""
    tokens = (part.strip().split(" ")[0] for part in text.split(","))
    return [token for token in tokens if token]


PYTHON = ImportPatternSet(
    language_label="python",
    line_patterns=[
        r"^\s*import\s+(?P<target>[\w.]+(?:\s+as\s+\w+)?(?:\s*,\s*[\w.]+(?:\s+as\s+\w+)?)*)",
        r"^\s*from\s+(?P<target>\.*[\w.]*)\s+import\s+\(?\s*(?P<names>\w+(?:\s+as\s+\w+)?(?:\s*,\s*\w+(?:\s+as\s+\w+)?)*)?",
    ],
    separator=".",
    extensions=[".py", "/__init__.py"],
    source_globs=["*.py"],
)

PHP = ImportPatternSet(
    language_label="php",
    line_patterns=[r"^\s*(?:include|require)(?:_once)?\b[^'\"]*['\"](?P<target>[^'\"]+)['\"]"],
    separator="/",
    extensions=[],
    source_globs=["*.php"],
)

TYPESCRIPT = ImportPatternSet(
    language_label="typescript",
    line_patterns=[
        r"^\s*import\s+(?:[^'\"]*?\s+from\s+)?['\"](?P<target>[^'\"]+)['\"]",
        r"^\s*export\s+[^'\"]*?\s+from\s+['\"](?P<target>[^'\"]+)['\"]",
        r"^.*?\brequire\(\s*['\"](?P<target>[^'\"]+)['\"]\s*\)",
    ],
    separator="/",
    extensions=[".ts", ".tsx", ".js", ".jsx", "/index.ts", "/index.tsx", "/index.js"],
    source_globs=["*.ts", "*.tsx", "*.js", "*.jsx"],
)


class PatternSetRegistry:
    """Registry mapping language labels to their import pattern sets"""
    _registry: Dict[str, ImportPatternSet] = {}

    @classmethod
    def register(cls, label: str, pattern_set: ImportPatternSet):
        cls._registry[label] = pattern_set

    @classmethod
    def get_pattern_set(cls, label: str) -> ImportPatternSet:
        if label not in cls._registry:
            raise BadParameter(f"No import pattern set registered for language: {label}. "
                               f"Known: {', '.join(sorted(cls._registry))}", element=label)
        return cls._registry[label]

    @classmethod
    def labels(cls) -> List[str]:
        return sorted(cls._registry)


def load_pattern_set(text: str) -> ImportPatternSet:
    """A custom pattern set from its JSON document."""
    return ImportPatternSet.model_validate_json(text)


PatternSetRegistry.register("python", PYTHON)
PatternSetRegistry.register("php", PHP)
PatternSetRegistry.register("typescript", TYPESCRIPT)
