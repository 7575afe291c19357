"""Exact verification engine for Saalschütz-derived harmonic number identities."""
