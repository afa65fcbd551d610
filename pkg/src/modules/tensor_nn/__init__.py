"""Dense-network core bounded context"""
