"""Demonstration infrastructure"""
