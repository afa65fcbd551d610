"""Environment application layer"""
