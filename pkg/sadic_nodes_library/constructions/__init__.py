"""Explicit subshift construction nodes."""
