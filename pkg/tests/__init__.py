"""
Tests Package Initialization

This package contains unit and property tests for the interval-valued
function calculus.

Test Organization:
- One test module per source module
- Worked examples checked exactly
- Operator laws, oracle equivalence and dense determination checked over
  seeded random instances
- Order laws of intervals checked with hypothesis

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""
