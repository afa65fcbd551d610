"""
Setup file for package.
Configuration is in pyproject.toml.
"""
from setuptools import setup

setup()
