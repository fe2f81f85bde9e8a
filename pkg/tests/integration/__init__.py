"""Integration tests for hdr-appell."""
