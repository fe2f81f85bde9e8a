"""Test suite for hdr-appell."""
