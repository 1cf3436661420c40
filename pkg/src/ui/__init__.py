"""User interface components."""
from .renderers import Renderer, FORMATS
from .theme_manager import ThemeManager, ThemeMode

__all__ = ['Renderer', 'FORMATS', 'ThemeManager', 'ThemeMode']
