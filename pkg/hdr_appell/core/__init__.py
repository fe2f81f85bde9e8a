"""Exact Clifford algebra, polynomial operators, bases and verification."""
