import logging
from enum import Enum
from fnmatch import fnmatchcase
from pathlib import PurePosixPath
from typing import Iterable, List, Optional, Set

from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)


class UnmatchedPolicy(str, Enum):
    IGNORE = "ignore"
    BASENAME = "basename"


class ModuleRule(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    pattern: str = Field(..., min_length=1)
    module: str = Field(..., min_length=1)

    def matches(self, path: str) -> bool:
        # whole path, or a suffix starting at a path segment
        return fnmatchcase(path, self.pattern) or fnmatchcase(path, "*/" + self.pattern)


class ModuleMap(BaseModel):
    """Ordered file-to-module rules; the first matching rule wins."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    rules: List[ModuleRule] = Field(default_factory=list)
    default: UnmatchedPolicy = UnmatchedPolicy.BASENAME

    def module_of(self, path: str) -> Optional[str]:
        path = path.replace("\\", "/")
        for rule in self.rules:
            if rule.matches(path):
                return rule.module
        if self.default is UnmatchedPolicy.BASENAME:
            return PurePosixPath(path).stem or None
        return None

    def modules_of(self, paths: Iterable[str]) -> Set[str]:
        found = {self.module_of(path) for path in paths}
        found.discard(None)
        return found
