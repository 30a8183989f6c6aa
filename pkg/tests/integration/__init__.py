"""CLI integration tests for shagraph.

Every job command is invoked through click's CliRunner on descriptor files
written to a temporary directory; no network or external state is needed.

Run with: pytest tests/integration/ -v
Skip with: pytest tests/ -m "not integration"
"""
