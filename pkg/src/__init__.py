"""PFAvoid - pattern-avoiding parking functions as labeled Dyck paths."""
__version__ = "1.0.0"
