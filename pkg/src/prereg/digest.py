import hashlib
import json
import logging
import re

from errors import MalformedDigest
from .models import HypothesisDoc

logger = logging.getLogger(__name__)

LEGACY_DIGEST_LENGTH = 16
_FULL_HEX = re.compile(r"^[0-9a-f]{64}$")
_LEGACY_HEX = re.compile(r"^[0-9a-f]{16}$")


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False)


def canonicalize(doc: HypothesisDoc) -> bytes:
    """
    Sorted keys, no insignificant whitespace, UTF-8, floats in shortest
    round-trip form (so 0.20 and 0.2 agree). Timestamps never enter here.
    """
    return canonical_json(doc.model_dump(mode="json")).encode("utf-8")


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def digest(doc: HypothesisDoc) -> str:
    return sha256_hex(canonicalize(doc))


def verify(doc: HypothesisDoc, claimed_digest: str, legacy: bool = False) -> bool:
    """
    True iff ``claimed_digest`` is the document's SHA-256 (case-insensitive).
    With ``legacy`` a 16-character truncated digest is accepted and compared
    as a prefix.
    """
    claimed = claimed_digest.strip().lower()
    if legacy and _LEGACY_HEX.match(claimed):
        return digest(doc).startswith(claimed)
    if not _FULL_HEX.match(claimed):
        hint = ""
        if _LEGACY_HEX.match(claimed):
            hint = (" This looks like a legacy 16-character digest; records before v6.1 used a truncated form. "
                    "Pass the legacy flag to compare by prefix.")
        raise MalformedDigest(f"Digest must be 64 hex characters, got {len(claimed)}.{hint}", element=claimed_digest)
    matched = digest(doc) == claimed
    logger.debug(f"Verify '{doc.experiment_id}': {matched}")
    return matched
