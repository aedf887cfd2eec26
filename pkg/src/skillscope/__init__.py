"""Job-posting ingestion, skill extraction, and skill-market analytics."""

__version__ = "0.1.0"
