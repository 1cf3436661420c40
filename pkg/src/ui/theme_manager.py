"""Terminal theme manager with dark/light mode support."""
import logging
import os
import sys
from enum import Enum
from typing import Optional, TextIO

from pygments import highlight
from pygments.console import colorize
from pygments.formatters import TerminalFormatter
from pygments.lexers import JsonLexer

logger = logging.getLogger(__name__)


class ThemeMode(Enum):
    """Theme modes."""
    DARK = "dark"
    LIGHT = "light"


class ColorMode(Enum):
    AUTO = "auto"
    ALWAYS = "always"
    NEVER = "never"


class ThemeManager:
    """
    Decides whether and how output is colored.

    Color is used only when the target stream is a terminal (or forced with
    color=always) and NO_COLOR is unset.
    """

    # verdict word -> pygments console color, per theme
    DARK_THEME = {
        'ok': 'brightgreen',
        'fail': 'brightred',
        'warn': 'brightyellow',
        'muted': 'gray',
    }

    LIGHT_THEME = {
        'ok': 'green',
        'fail': 'red',
        'warn': 'yellow',
        'muted': 'brightblack',
    }

    def __init__(self, theme: str = "dark", color: str = "auto", stream: Optional[TextIO] = None):
        """Initialize theme manager."""
        self.mode = ThemeMode(theme)
        self.color = ColorMode(color)
        self.stream = stream if stream is not None else sys.stdout
        logger.info(f"ThemeManager initialized: {self.mode.value}, color={self.color.value}")

    @property
    def palette(self) -> dict:
        return self.DARK_THEME if self.mode is ThemeMode.DARK else self.LIGHT_THEME

    def use_color(self) -> bool:
        """Whether output to the stream should be colored."""
        if self.color is ColorMode.NEVER or os.environ.get("NO_COLOR"):
            return False
        if self.color is ColorMode.ALWAYS:
            return True
        isatty = getattr(self.stream, "isatty", None)
        return bool(isatty and isatty())

    def highlight_json(self, text: str) -> str:
        """Syntax-highlight JSON when color is on."""
        if not self.use_color():
            return text
        return highlight(text, JsonLexer(), TerminalFormatter(bg=self.mode.value))

    def paint(self, role: str, text: str) -> str:
        """Color text by role (ok, fail, warn, muted)."""
        if not self.use_color():
            return text
        return colorize(self.palette[role], text)
