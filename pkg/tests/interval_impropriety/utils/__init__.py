"""
Utilities for tests.
"""
