"""
Core layer - Shared kernel for domain logic.
Contains base classes and interfaces used across all modules.
"""