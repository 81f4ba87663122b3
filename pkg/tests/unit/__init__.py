"""Unit tests for business logic functions."""
