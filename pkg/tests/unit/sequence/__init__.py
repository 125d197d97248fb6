"""Unit tests for the sequence package."""
