"""Training CLI"""
