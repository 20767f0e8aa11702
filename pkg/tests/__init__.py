"""
affine-fc Test Suite

Test Categories:
- unit: Unit tests (fast, small ranks)
- integration: Integration tests (whole balls, CLI end to end)
- slow: Slow-running exhaustive acceptance runs
- models, exceptions: Models and exception hierarchy
- core, words, patterns, roots, cells, extended: One marker per topic module
- verification: Verification harness
- cli: Command line

Run all tests:
    pytest

Run only unit tests:
    pytest -m unit

Skip slow tests:
    pytest -m "not slow"

Run with coverage:
    pytest --cov=affine_fc --cov-report=html
"""

__all__ = []
