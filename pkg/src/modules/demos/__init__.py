"""Demonstration data bounded context"""
