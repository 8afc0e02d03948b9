import asyncio
import json
from datetime import datetime, timezone

import pytest

import errors
from prereg import HypothesisDoc, audit_ledger, digest, parse_ledger, read_ledger, record_to_json, register
from tests.helpers.prereg_helpers import hypothesis

pytestmark = pytest.mark.unit


def clock() -> datetime:
    return datetime(2026, 3, 14, 9, 26, 53, tzinfo=timezone.utc)


def doc(experiment_id: str) -> HypothesisDoc:
    return HypothesisDoc.model_validate(hypothesis(experiment_id=experiment_id))


@pytest.fixture
def ledger(tmp_path):
    return tmp_path / "prereg" / "ledger.jsonl"


async def test_missing_ledger_reads_empty(ledger) -> None:
    assert await read_ledger(ledger) == []
    assert await audit_ledger(ledger) == []


async def test_register_appends_sequential_records(ledger) -> None:
    records = [await register(doc(f"exp-{i}"), ledger, clock=clock) for i in range(3)]
    assert [r.ledger_index for r in records] == [0, 1, 2]
    assert records[0].timestamp_utc == "2026-03-14T09:26:53Z"
    assert records[1].digest == digest(doc("exp-1"))
    lines = ledger.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    assert json.loads(lines[2])["index"] == 2
    assert await read_ledger(ledger) == records


async def test_duplicate_experiment_is_rejected(ledger) -> None:
    await register(doc("exp-a"), ledger, clock=clock)
    before = ledger.read_bytes()
    with pytest.raises(errors.DuplicateExperiment):
        await register(doc("exp-a"), ledger, clock=clock)
    assert ledger.read_bytes() == before


async def test_concurrent_registrations_get_distinct_indices(ledger) -> None:
    records = await asyncio.gather(*(register(doc(f"exp-{i}"), ledger, clock=clock) for i in range(4)))
    assert sorted(r.ledger_index for r in records) == [0, 1, 2, 3]
    assert await audit_ledger(ledger) == []


async def test_audit_flags_edited_doc(ledger) -> None:
    for i in range(3):
        await register(doc(f"exp-{i}"), ledger, clock=clock)
    lines = ledger.read_text(encoding="utf-8").splitlines()
    record = json.loads(lines[1])
    record["doc"]["notes"] = "quietly changed"
    lines[1] = json.dumps(record)
    ledger.write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert await audit_ledger(ledger) == [1]


async def test_audit_flags_sequence_gap(ledger) -> None:
    for i in range(2):
        await register(doc(f"exp-{i}"), ledger, clock=clock)
    lines = ledger.read_text(encoding="utf-8").splitlines()
    ledger.write_text(lines[1] + "\n" + lines[0] + "\n", encoding="utf-8")
    assert await audit_ledger(ledger) == [1, 0]


def test_parse_ledger_reports_line(ledger) -> None:
    with pytest.raises(errors.SchemaError) as excinfo:
        parse_ledger('\n{"not": "a record"}\n')
    assert excinfo.value.element == "2"


async def test_record_to_json_uses_index_alias(ledger) -> None:
    record = await register(doc("exp-json"), ledger, clock=clock)
    payload = json.loads(record_to_json(record))
    assert payload["index"] == 0
    assert "ledger_index" not in payload


async def test_unwritable_ledger_raises_ledger_error(tmp_path) -> None:
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(errors.LedgerIOError):
        await register(doc("exp-x"), blocker / "ledger.jsonl", clock=clock)
