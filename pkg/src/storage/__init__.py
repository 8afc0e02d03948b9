from .backends.istorage_backend import IStorageBackend
from .backends.local_file_backend import LocalFileBackend

__all__ = ["IStorageBackend", "LocalFileBackend"]
