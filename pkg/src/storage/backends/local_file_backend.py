import asyncio
import contextlib
import logging
import os
from pathlib import Path
from typing import AsyncIterator, Dict, Tuple

import aiofiles
import aiofiles.os

from .istorage_backend import IStorageBackend

try:
    import fcntl
except ImportError:  # Windows: in-process locking only
    fcntl = None

logger = logging.getLogger(__name__)


class LocalFileBackend(IStorageBackend):
    def __init__(self, root_path: str):
        self.root_path = Path(root_path).resolve()
        self._locks: Dict[str, asyncio.Lock] = {}
        logger.debug(f"Initialized LocalFileBackend with root: {self.root_path}")

    @classmethod
    def for_path(cls, path) -> Tuple["LocalFileBackend", str]:
        """Backend rooted at the file's directory, and the file's identifier within it."""
        path = Path(path)
        return cls(str(path.parent)), path.name

    def _get_full_path(self, identifier: str) -> Path:
        """Resolves an identifier to an absolute path, ensuring it's within the root."""
        full_path = (self.root_path / identifier).resolve()
        common = os.path.commonpath([str(self.root_path), str(full_path)])
        if common != str(self.root_path):
            raise ValueError(f"Path traversal attempt detected: {identifier}")
        return full_path

    async def save_bytes(self, identifier: str, data: bytes):
        full_path = self._get_full_path(identifier)
        try:
            await aiofiles.os.makedirs(full_path.parent, exist_ok=True)
            async with aiofiles.open(full_path, mode="wb") as f:
                await f.write(data)
            logger.debug(f"Saved {len(data)} bytes to {full_path}")
        except Exception as e:
            logger.error(f"Error saving bytes to {full_path}: {e}")
            raise

    async def append_bytes(self, identifier: str, data: bytes):
        full_path = self._get_full_path(identifier)
        try:
            await aiofiles.os.makedirs(full_path.parent, exist_ok=True)
            async with aiofiles.open(full_path, mode="ab") as f:
                await f.write(data)
                await f.flush()
            logger.debug(f"Appended {len(data)} bytes to {full_path}")
        except Exception as e:
            logger.error(f"Error appending bytes to {full_path}: {e}")
            raise

    async def load_bytes(self, identifier: str) -> bytes:
        full_path = self._get_full_path(identifier)
        try:
            async with aiofiles.open(full_path, mode="rb") as f:
                data = await f.read()
            logger.debug(f"Loaded {len(data)} bytes from {full_path}")
            return data
        except FileNotFoundError:
            logger.warning(f"File not found: {full_path}")
            raise
        except Exception as e:
            logger.error(f"Error loading bytes from {full_path}: {e}")
            raise

    async def exists(self, identifier: str) -> bool:
        full_path = self._get_full_path(identifier)
        return await aiofiles.os.path.exists(full_path)

    @contextlib.asynccontextmanager
    async def lock(self, identifier: str) -> AsyncIterator[None]:
        full_path = self._get_full_path(identifier)
        in_process = self._locks.setdefault(str(full_path), asyncio.Lock())
        async with in_process:
            if fcntl is None:
                yield
                return
            await aiofiles.os.makedirs(full_path.parent, exist_ok=True)
            lock_path = full_path.with_name(full_path.name + ".lock")
            async with aiofiles.open(lock_path, mode="a") as handle:
                fd = handle.fileno()
                await asyncio.get_running_loop().run_in_executor(None, fcntl.flock, fd, fcntl.LOCK_EX)
                try:
                    yield
                finally:
                    fcntl.flock(fd, fcntl.LOCK_UN)
