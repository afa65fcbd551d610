"""Style application layer"""
