import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Type, TypeVar

from pydantic import BaseModel, Field, ValidationError

from config import Settings
from errors import SchemaError
from prereg.digest import sha256_hex
from storage.backends.local_file_backend import LocalFileBackend
from . import __version__

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)

MANIFEST_TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M:%SZ"


class RunManifest(BaseModel):
    """Reproducibility envelope: what ran, with which arguments, on which exact inputs."""
    command: str
    arguments: Dict[str, Any]
    input_digests: Dict[str, str] = Field(default_factory=dict)
    output_digests: Dict[str, str] = Field(default_factory=dict)
    tool_version: str = __version__
    timestamp_utc: str


def _plain(value: Any) -> Any:
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


class CommandContext:
    """Per-invocation state shared by command handlers: settings, file IO and digests."""

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.input_digests: Dict[str, str] = {}
        self.output_digests: Dict[str, str] = {}

    @property
    def as_json(self) -> bool:
        return bool(getattr(self.args, "json", False))

    async def read_bytes(self, path: Path) -> bytes:
        backend, name = LocalFileBackend.for_path(path)
        data = await backend.load_bytes(name)
        self.input_digests[str(path)] = sha256_hex(data)
        return data

    async def read_text(self, path: Path) -> str:
        data = await self.read_bytes(path)
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise SchemaError(f"{path} is not UTF-8 text: {e}", element=str(path)) from e

    async def read_model(self, path: Path, model: Type[ModelT]) -> ModelT:
        return parse_model(await self.read_text(path), model, str(path))

    async def write_text(self, path: Path, text: str) -> None:
        backend, name = LocalFileBackend.for_path(path)
        data = await backend.save_text(name, text)
        self.output_digests[str(path)] = sha256_hex(data)
        logger.info(f"Wrote {path}")

    def emit(self, text: str) -> None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")

    def emit_json(self, payload: Any) -> None:
        self.emit(json.dumps(payload, indent=2, ensure_ascii=False))

    def manifest(self, command: str) -> RunManifest:
        arguments = {key: _plain(value) for key, value in sorted(vars(self.args).items())
                     if key not in ("handler", "manifest") and not callable(value)}
        return RunManifest(
            command=command,
            arguments=arguments,
            input_digests=dict(sorted(self.input_digests.items())),
            output_digests=dict(sorted(self.output_digests.items())),
            timestamp_utc=self.settings.now_utc().strftime(MANIFEST_TIMESTAMP_FORMAT),
        )


def parse_model(text: str, model: Type[ModelT], source: str) -> ModelT:
    """Validate a JSON document, mapping validation failures to SchemaError."""
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ())) or "<document>"
        raise SchemaError(f"{source}: invalid {model.__name__} at {where}: {first.get('msg')}", element=where) from e
