"""Verification suite nodes."""
