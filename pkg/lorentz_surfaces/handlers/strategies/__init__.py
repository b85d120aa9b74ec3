"""Strategy pattern implementations for command handlers"""
