"""Namespace implementations exposed by AppellClient."""
