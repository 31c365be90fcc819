"""Test package root for argdec-tools."""
