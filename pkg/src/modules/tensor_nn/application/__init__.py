"""Network application layer"""
