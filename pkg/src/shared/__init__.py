"""Shared utilities and common functionality across modules"""
