"""Training domain: agent networks, rollout buffer, advantage estimation, PPO objective"""
