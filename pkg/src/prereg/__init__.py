from .models import Direction, HypothesisDoc, PreregRecord
from .digest import LEGACY_DIGEST_LENGTH, canonicalize, digest, sha256_hex, verify
from .ledger import audit_ledger, parse_ledger, read_ledger, record_to_json, register

__all__ = [
    "Direction", "HypothesisDoc", "PreregRecord",
    "LEGACY_DIGEST_LENGTH", "canonicalize", "digest", "sha256_hex", "verify",
    "audit_ledger", "parse_ledger", "read_ledger", "record_to_json", "register",
]
