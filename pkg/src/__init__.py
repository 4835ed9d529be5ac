"""
Source Package Initialization

This package contains the core modules for the calculus of interval-valued
functions: extended-real intervals, cubical cell complexes, Baire operators,
continuity checks and the gallery of worked examples.

Package Structure:
- extreal_interval.py: Extended reals, intervals, width, modulus and orders
- cell_complex.py: Cubical complexes, stars and cell interval functions
- analytic_function.py: Closed-form interval functions
- baire_operators.py: Lower/upper Baire operators, graph completion, numeric estimator
- continuity.py: s-continuity, H-continuity, oracle and dense determination
- gallery.py: Step functions, alpha, beta and the shock wave solution
- function_spec_io.py: Function spec JSON and CSV reading and writing
- random_functions.py: Seeded random complexes and cell functions
- test_runner.py: Runs the pytest suites
- cli.py: Command-line front end
- constants.py: Centralized constants

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""
