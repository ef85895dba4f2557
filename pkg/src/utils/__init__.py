"""Utilities package for shared functionality."""