"""Construction, verification and classification of divisible design Cayley graphs."""

__version__ = "0.1.0"
