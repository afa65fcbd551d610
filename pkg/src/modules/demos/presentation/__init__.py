"""Demonstration CLI"""
