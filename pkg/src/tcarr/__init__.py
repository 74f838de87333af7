"""Topological complexity bounds for complex hyperplane arrangements."""
