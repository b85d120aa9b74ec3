"""Utility modules for export and error reporting."""
