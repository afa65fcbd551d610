"""Demonstration application layer"""
