"""Familiar-form experiments on Java code with n-gram language models."""

__version__ = "0.1.0"
