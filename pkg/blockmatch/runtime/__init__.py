"""Shared runtime layer.

Everything that is not specific to one algorithm or one pipeline stage lives
here: environment configuration read from ``.env`` and the process
environment.
"""
