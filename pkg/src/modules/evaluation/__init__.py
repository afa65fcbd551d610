"""Evaluation and command-line surface bounded context"""
