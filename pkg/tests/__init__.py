"""Test package for ctower."""
