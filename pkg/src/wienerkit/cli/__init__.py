"""Command-line front end and the claims registry."""
