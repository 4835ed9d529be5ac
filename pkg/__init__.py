"""
Project Root Initialization

Top-level package initialization for the interval-valued function calculus.

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""
