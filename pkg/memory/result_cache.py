"""
Result Cache - NumRange Toolkit
Bounded memo of certified computations keyed by matrix fingerprint.
A catalog call asks for w(A), m(BA), ... from several evaluators; the cache
lets each distinct scan run once per process.
"""

import hashlib
import logging
import threading
from collections import OrderedDict
from typing import Any, Dict, Optional

import numpy as np

from config.settings import Settings

logger = logging.getLogger(__name__)


def matrix_key(kind: str, matrix: np.ndarray, *params: Any) -> str:
    """Fingerprint a computation: kind, shape, raw entries and parameters"""
    digest = hashlib.sha1()
    digest.update(kind.encode("utf-8"))
    digest.update(repr(matrix.shape).encode("utf-8"))
    digest.update(np.ascontiguousarray(matrix, dtype=np.complex128).tobytes())
    digest.update(repr(params).encode("utf-8"))
    return digest.hexdigest()


class ResultCache:
    """
    In-process memo with compaction.
    Values must be immutable (frozen models); they are shared between callers.
    """

    def __init__(
        self,
        max_entries: int = Settings.CACHE_MAX_ENTRIES,
        compaction_threshold: float = Settings.CACHE_COMPACTION_THRESHOLD,
    ):
        self.max_entries = max_entries
        self.compaction_threshold = compaction_threshold
        self._store: "OrderedDict[str, Any]" = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.compactions = 0

        logger.debug(f"ResultCache initialized (max_entries: {max_entries})")

    def store(self, key: str, value: Any) -> None:
        """Store a computed value; compacts when the threshold is reached"""
        with self._lock:
            if len(self._store) >= int(self.max_entries * self.compaction_threshold):
                self._compact()
            self._store[key] = value

    def retrieve(self, key: str) -> Optional[Any]:
        """Return the stored value or None"""
        with self._lock:
            value = self._store.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def _compact(self) -> None:
        # oldest half goes; insertion order is the age order
        drop = max(1, len(self._store) // 2)
        for _ in range(drop):
            self._store.popitem(last=False)
        self.compactions += 1
        logger.debug(f"ResultCache compacted, dropped {drop} entries")

    def clear(self) -> None:
        with self._lock:
            self._store.clear()
            self.hits = 0
            self.misses = 0
            self.compactions = 0

    def get_statistics(self) -> Dict[str, Any]:
        with self._lock:
            lookups = self.hits + self.misses
            return {
                "entries": len(self._store),
                "max_entries": self.max_entries,
                "hits": self.hits,
                "misses": self.misses,
                "hit_rate": round(self.hits / lookups, 4) if lookups else 0.0,
                "compactions": self.compactions,
            }


# Global instance
result_cache = ResultCache()
