"""Tests package for Cyclic Structures."""
