"""Compiled kernels.  Sources are ``.pyx`` files built by ``setup.py``."""
