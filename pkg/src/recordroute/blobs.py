"""Content-addressed blob storage for attachment bytes.

Blobs live outside the relational rows, keyed by the SHA-256 of their
content, so the storage key can never collide or disagree with the digest
recorded on the attachment row.
"""

from __future__ import annotations

import hashlib
from pathlib import Path


def content_digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


class MemoryBlobStore:
    """Dict-backed store for in-memory instances and tests."""

    def __init__(self):
        self._blobs: dict[str, bytes] = {}

    def put(self, data: bytes) -> str:
        digest = content_digest(data)
        self._blobs[digest] = data
        return digest

    def get(self, digest: str) -> bytes | None:
        return self._blobs.get(digest)

    def has(self, digest: str) -> bool:
        return digest in self._blobs

    def delete(self, digest: str) -> None:
        self._blobs.pop(digest, None)

    def digests(self) -> list[str]:
        return sorted(self._blobs)

    def replace_all(self, blobs: dict[str, bytes]) -> None:
        self._blobs = dict(blobs)


class FileBlobStore:
    """Flat on-disk store: <root>/<digest[:2]>/<digest>."""

    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, digest: str) -> Path:
        return self.root / digest[:2] / digest

    def put(self, data: bytes) -> str:
        digest = content_digest(data)
        path = self._path(digest)
        if not path.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_bytes(data)
            tmp.replace(path)
        return digest

    def get(self, digest: str) -> bytes | None:
        path = self._path(digest)
        if not path.exists():
            return None
        return path.read_bytes()

    def has(self, digest: str) -> bool:
        return self._path(digest).exists()

    def delete(self, digest: str) -> None:
        path = self._path(digest)
        if path.exists():
            path.unlink()

    def digests(self) -> list[str]:
        return sorted(p.name for p in self.root.glob("??/*") if not p.name.endswith(".tmp"))

    def replace_all(self, blobs: dict[str, bytes]) -> None:
        for digest in self.digests():
            self.delete(digest)
        for data in blobs.values():
            self.put(data)
