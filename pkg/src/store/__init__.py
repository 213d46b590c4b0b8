"""
On-disk cache of computed form spaces
"""
from .form_cache import FormSpaceCache, cache_key, get_form_cache

__all__ = ["FormSpaceCache", "cache_key", "get_form_cache"]
