"""Invariants of square-tiled surfaces and the curve of the origami S."""
