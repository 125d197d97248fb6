"""Unit tests for the verify package."""
