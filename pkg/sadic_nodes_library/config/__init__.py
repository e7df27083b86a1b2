"""Directive-sequence and budget configuration nodes."""
