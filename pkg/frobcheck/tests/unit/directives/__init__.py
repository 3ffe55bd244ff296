"""Directive tests."""
