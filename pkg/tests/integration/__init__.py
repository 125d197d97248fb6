"""Integration tests for horadam-quat campaigns and the CLI."""


