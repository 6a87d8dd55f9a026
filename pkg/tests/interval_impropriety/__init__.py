"""
Tests for improper interval edge-colorings.
"""

import pytest

pytest.register_assert_rewrite('tests.interval_impropriety.utils')
