"""
Form Space Cache Management

On-disk cache of computed FormSpace bases, one JSON file per key. A key is
(group, weight, character, kind, precision, format version), so a change of
serialization format invalidates old entries. Writes go through a temporary
file and os.replace under a per-key lock, so a reader never sees half a file.
"""
import json
import os
import tempfile
import threading
from pathlib import Path
from typing import Callable, Dict, List, Optional

from src.config import Config
from src.generators import CharacterLabel, FormSpace, GroupLabel, SpaceKind
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

CACHE_SUFFIX = ".json"


def cache_key(
    group: GroupLabel,
    weight: int,
    character: CharacterLabel,
    kind: SpaceKind,
    precision: int,
    version: str = Config.CACHE_FORMAT_VERSION,
) -> str:
    """File stem such as "g0_4-k6-trivial-Snew-p130-v1" """
    return (
        f"{GroupLabel(group).value}-k{weight}-{CharacterLabel(character).value}-"
        f"{SpaceKind(kind).value}-p{precision}-{version}"
    )


class FormSpaceCache:
    """Form Space Cache Management Class"""

    def __init__(self, cache_dir: Optional[Path] = None, enabled: bool = True):
        """
        Initialize the cache manager

        Args:
            cache_dir: Directory for cache files, defaults to Config.CACHE_DIR
            enabled: When False, load always misses and save does nothing
        """
        self.cache_dir = Path(cache_dir or Config.CACHE_DIR)
        self.enabled = enabled
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self._locks: Dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock(self, key: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(key, threading.Lock())

    def path_for(self, key: str) -> Path:
        return self.cache_dir / f"{key}{CACHE_SUFFIX}"

    def load(self, key: str) -> Optional[FormSpace]:
        """
        Load a cached space

        Args:
            key: Cache key from cache_key()

        Returns:
            The cached FormSpace, or None on a miss or an unreadable entry
        """
        if not self.enabled:
            return None
        path = self.path_for(key)
        with self._lock(key):
            if not path.exists():
                logger.info(f"Cache miss: {key}")
                return None
            try:
                with open(path, "r", encoding="utf-8") as handle:
                    space = FormSpace.from_json(json.load(handle))
            except (OSError, ValueError, KeyError) as e:
                logger.warning(f"⚠️ Failed to decode cache entry {key}: {e}, ignoring it")
                return None
        logger.info(f"✅ Cache hit: {key}")
        return space

    def save(self, key: str, space: FormSpace) -> None:
        """Write a space atomically under its key"""
        if not self.enabled:
            return
        path = self.path_for(key)
        payload = json.dumps(space.to_json(), sort_keys=True)
        with self._lock(key):
            fd, temp_name = tempfile.mkstemp(dir=self.cache_dir, prefix=f".{key}.", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as handle:
                    handle.write(payload)
                os.replace(temp_name, path)
            except OSError:
                if os.path.exists(temp_name):
                    os.remove(temp_name)
                raise
        logger.info(f"✅ Cached {key} at {path}")

    def get_or_build(self, key: str, build: Callable[[], FormSpace]) -> FormSpace:
        """Cached space for key, building and saving it on a miss"""
        space = self.load(key)
        if space is None:
            space = build()
            self.save(key, space)
        return space

    def list(self) -> List[str]:
        """Sorted keys currently on disk"""
        return sorted(path.name[: -len(CACHE_SUFFIX)] for path in self.cache_dir.glob(f"*{CACHE_SUFFIX}"))

    def clear(self) -> int:
        """
        Delete every cache entry

        Returns:
            Number of entries removed
        """
        removed = 0
        for key in self.list():
            with self._lock(key):
                try:
                    self.path_for(key).unlink()
                    removed += 1
                except FileNotFoundError:
                    pass
        logger.info(f"✅ Cleared {removed} cache entries from {self.cache_dir}")
        return removed


# Global singleton
_cache_instance = None


def get_form_cache(cache_dir: Optional[Path] = None, enabled: bool = True) -> FormSpaceCache:
    """
    Get the form space cache singleton

    A different directory or enabled flag replaces the singleton.

    Returns:
        FormSpaceCache instance
    """
    global _cache_instance
    cache_dir = Path(cache_dir or Config.CACHE_DIR)
    if _cache_instance is None or _cache_instance.cache_dir != cache_dir or _cache_instance.enabled != enabled:
        _cache_instance = FormSpaceCache(cache_dir, enabled)
    return _cache_instance
