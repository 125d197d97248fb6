"""Unit tests for the identities package."""
