"""Griptape Nodes Sadic Words Library.

This package provides nodes for factor complexity, special words, return-word codings
and recognizability of S-adic subshifts, backed by the `sadic` kernel.
"""
