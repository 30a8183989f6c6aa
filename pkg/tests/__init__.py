"""shagraph test suite.

Run with: uv run pytest tests/ -v
Skip the randomized sweeps with: uv run pytest tests/ -m "not slow"
Coverage: uv run pytest tests/ --cov=shagraph --cov-report=html
"""
