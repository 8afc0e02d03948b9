import abc
from typing import AsyncContextManager, Optional


class IStorageBackend(abc.ABC):
    """
    Byte store for graph documents, reports, manifests and the pre-registration ledger.
    Identifiers are relative paths under the backend root. Text helpers are UTF-8.
    """

    @abc.abstractmethod
    async def save_bytes(self, identifier: str, data: bytes):
        """Replace the document's content."""

    @abc.abstractmethod
    async def append_bytes(self, identifier: str, data: bytes):
        """Append to the document, creating it if needed. Earlier content is never rewritten."""

    @abc.abstractmethod
    async def load_bytes(self, identifier: str) -> bytes:
        pass

    @abc.abstractmethod
    async def exists(self, identifier: str) -> bool:
        pass

    @abc.abstractmethod
    def lock(self, identifier: str) -> AsyncContextManager[None]:
        """Exclusive advisory lock; the ledger holds it across read-check-append."""

    async def load_text(self, identifier: str, missing: Optional[str] = None) -> str:
        """Decoded content; ``missing`` is returned for an absent document when given."""
        if missing is not None and not await self.exists(identifier):
            return missing
        return (await self.load_bytes(identifier)).decode("utf-8")

    async def save_text(self, identifier: str, text: str) -> bytes:
        data = text.encode("utf-8")
        await self.save_bytes(identifier, data)
        return data

    async def append_line(self, identifier: str, line: str) -> None:
        await self.append_bytes(identifier, (line.rstrip("\n") + "\n").encode("utf-8"))
