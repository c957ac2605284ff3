"""etheta test suite."""
