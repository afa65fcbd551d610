"""Bounded contexts (modules)"""