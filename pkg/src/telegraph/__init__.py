"""Self-similar solutions of a non-autonomous telegraph heat equation."""
__version__ = "0.1.0"
