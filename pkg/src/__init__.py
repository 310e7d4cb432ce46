"""Anahita AUV simulator."""
