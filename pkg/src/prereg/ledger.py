import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, List, Optional

from pydantic import ValidationError

from errors import DuplicateExperiment, LedgerIOError, SchemaError
from storage.backends.istorage_backend import IStorageBackend
from storage.backends.local_file_backend import LocalFileBackend
from .digest import canonical_json, digest
from .models import HypothesisDoc, PreregRecord

logger = logging.getLogger(__name__)

TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M:%SZ"

Clock = Callable[[], datetime]


def parse_ledger(text: str) -> List[PreregRecord]:
    records = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            records.append(PreregRecord.model_validate_json(line))
        except ValidationError as e:
            raise SchemaError(f"Ledger line {line_number} is not a valid record: {e.errors()[0].get('msg')}",
                              element=str(line_number)) from e
    return records


async def _read(backend: IStorageBackend, identifier: str) -> List[PreregRecord]:
    return parse_ledger(await backend.load_text(identifier, missing=""))


async def read_ledger(ledger_path: Path) -> List[PreregRecord]:
    backend, identifier = LocalFileBackend.for_path(ledger_path)
    try:
        return await _read(backend, identifier)
    except OSError as e:
        logger.error(f"Failed to read ledger {ledger_path}: {e}", exc_info=True)
        raise LedgerIOError(f"Cannot read ledger {ledger_path}: {e}", element=str(ledger_path)) from e


async def register(doc: HypothesisDoc, ledger_path: Path, clock: Optional[Clock] = None) -> PreregRecord:
    """Append one record under an exclusive lock. Existing lines are never rewritten."""
    backend, identifier = LocalFileBackend.for_path(ledger_path)
    try:
        async with backend.lock(identifier):
            existing = await _read(backend, identifier)
            if any(record.doc.experiment_id == doc.experiment_id for record in existing):
                raise DuplicateExperiment(f"Experiment '{doc.experiment_id}' is already registered",
                                          element=doc.experiment_id)
            now = (clock or (lambda: datetime.now(timezone.utc)))()
            record = PreregRecord(
                ledger_index=existing[-1].ledger_index + 1 if existing else 0,
                digest=digest(doc),
                timestamp_utc=now.astimezone(timezone.utc).strftime(TIMESTAMP_FORMAT),
                doc=doc,
            )
            await backend.append_line(identifier, canonical_json(record.model_dump(mode="json", by_alias=True)))
    except OSError as e:
        logger.error(f"Failed to append to ledger {ledger_path}: {e}", exc_info=True)
        raise LedgerIOError(f"Cannot write ledger {ledger_path}: {e}", element=str(ledger_path)) from e
    logger.info(f"Registered '{doc.experiment_id}' as record {record.ledger_index} ({record.digest})")
    return record


async def audit_ledger(ledger_path: Path) -> List[int]:
    """Indices of records whose digest no longer matches their doc, or that break the index sequence."""
    records = await read_ledger(ledger_path)
    bad = []
    for position, record in enumerate(records):
        if record.ledger_index != position or digest(record.doc) != record.digest:
            bad.append(record.ledger_index)
    if bad:
        logger.warning(f"Ledger {ledger_path}: {len(bad)} tampered or out-of-sequence record(s): {bad}")
    return bad


def record_to_json(record: PreregRecord) -> str:
    return json.dumps(record.model_dump(mode="json", by_alias=True), indent=2, ensure_ascii=False)
