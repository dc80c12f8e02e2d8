"""
Subcommand groups of the staraut CLI.
"""

__all__ = []
