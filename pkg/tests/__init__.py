"""Test package for StarBessel."""
