"""Core functionality modules."""
from .config import AppConfig
from .database import ResultStore

__all__ = ['AppConfig', 'ResultStore']
