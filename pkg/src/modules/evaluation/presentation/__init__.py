"""Evaluation CLI"""
