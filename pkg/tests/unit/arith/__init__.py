"""Unit tests for the arith package."""
