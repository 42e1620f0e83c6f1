"""
Test suite for sentifuzz.
"""
