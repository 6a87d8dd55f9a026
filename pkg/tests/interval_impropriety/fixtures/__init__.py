"""
Common fixtures.
"""
