"""Constrained optimization application layer"""
