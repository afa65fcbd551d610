"""Evaluation infrastructure"""
