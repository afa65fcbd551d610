"""Training application layer"""
