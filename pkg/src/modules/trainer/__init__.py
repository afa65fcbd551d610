"""Training pipeline bounded context"""
