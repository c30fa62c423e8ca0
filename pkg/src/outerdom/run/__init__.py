"""Command-line entry point and experiment harness."""
