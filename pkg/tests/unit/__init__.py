"""Unit tests for hdr-appell."""
