"""CLI module for hyperturan."""
