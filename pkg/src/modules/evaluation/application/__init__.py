"""Evaluation application layer"""
