"""Minimum semitotal domination on strongly chordal graphs."""
