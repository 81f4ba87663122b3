"""Test suite for Cashi Credit Scoring API."""
