"""Network domain: parameters, forward/backward passes, optimizer state"""
