"""Posting and skill persistence."""

from .db import SCHEMA_VERSION, Store, StoreError, UnknownPosting

__all__ = ["SCHEMA_VERSION", "Store", "StoreError", "UnknownPosting"]
