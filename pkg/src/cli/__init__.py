"""Command-line interface for the Anahita simulator."""
