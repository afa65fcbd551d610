"""Training infrastructure: run directories, checkpoints, metrics"""
