"""Construction artifacts cached by (structure-table fingerprint, mu)."""
from __future__ import annotations

import logging

from cachetools import LRUCache

from jordan_star.utils import config

logger = logging.getLogger(__name__)

_ARTIFACTS: LRUCache = LRUCache(maxsize=config.CACHE_SIZE)


def cached(kind: str, fingerprint: str, mu, build):
    """Return the cached artifact or build and store it."""
    key = (kind, fingerprint, str(mu))
    if key in _ARTIFACTS:
        logger.debug("cache hit %s", key[:1] + (key[1][:12],) + key[2:])
        return _ARTIFACTS[key]
    value = build()
    _ARTIFACTS[key] = value
    return value


def clear() -> None:
    _ARTIFACTS.clear()
