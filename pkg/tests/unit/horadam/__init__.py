"""Unit tests for the horadam package."""
