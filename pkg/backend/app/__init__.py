"""Command-line front door: one command module per area, wired by main.py."""
