"""
Entry point for running hyperturan as a module: python -m hyperturan
"""

from hyperturan.cli.commands import app

if __name__ == "__main__":
    app()
