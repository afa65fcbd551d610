"""Network infrastructure"""
