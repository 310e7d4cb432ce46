"""Test suite for the Anahita simulator."""
