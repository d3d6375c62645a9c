"""
Rack'O Script Evolution
A simplified Rack'O engine, a five-predicate decision DSL, and an evolutionary search that synthesizes game-playing scripts.
"""

__version__ = "1.0.0"
