import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from errors import MalformedLog

logger = logging.getLogger(__name__)

# git log --name-only --pretty=format:%H%x09%ct
HEADER = re.compile(r"^(?P<commit_id>[0-9a-f]{4,64})\t(?P<timestamp>\d+)$")


@dataclass(frozen=True)
class CommitRecord:
    commit_id: str
    timestamp: int
    files: Tuple[str, ...]


def parse_git_log(text: str) -> List[CommitRecord]:
    """
    One record per commit header, files deduplicated in first-seen order.
    Commits without any file line are dropped.
    """
    commits: List[CommitRecord] = []
    seen_ids = set()
    current: Optional[Tuple[str, int]] = None
    files: List[str] = []

    def flush() -> None:
        if current is None:
            return
        if files:
            commits.append(CommitRecord(commit_id=current[0], timestamp=current[1], files=tuple(dict.fromkeys(files))))
        else:
            logger.debug(f"Dropping commit {current[0]} without file lines")

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        header = HEADER.match(line)
        if header:
            flush()
            commit_id = header.group("commit_id")
            if commit_id in seen_ids:
                raise MalformedLog(f"duplicate commit id {commit_id}", line_number)
            seen_ids.add(commit_id)
            current = (commit_id, int(header.group("timestamp")))
            files = []
            continue
        if current is None:
            raise MalformedLog(f"file line before any commit header: {line.strip()!r}", line_number)
        files.append(line.strip())
    flush()

    logger.info(f"Parsed {len(commits)} commits from git log ({len(seen_ids) - len(commits)} without files)")
    return commits
