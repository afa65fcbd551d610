"""Desk-scale environments bounded context"""
