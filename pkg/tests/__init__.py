"""Tests for acm-toolkit."""
