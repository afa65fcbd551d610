"""Constrained optimization bounded context"""
