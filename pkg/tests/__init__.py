"""Tests for ``interval_impropriety``."""
