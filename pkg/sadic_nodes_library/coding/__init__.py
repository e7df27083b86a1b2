"""Coding and recognizability nodes."""
