"""Unit tests for the quaternion package."""
