"""Input and output helpers for the staraut CLI."""
