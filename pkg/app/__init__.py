"""Command-line application: CLI commands, report rendering and batch pipelines."""
