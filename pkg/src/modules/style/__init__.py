"""Style reward bounded context"""
