"""Evaluation domain: trajectory distances and scores"""
