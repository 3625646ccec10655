"""
hyperturan - spectral Turan problems for uniform hypergraphs
"""

__version__ = "0.1.0"
