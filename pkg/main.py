"""
Hausdorff Intervals Main

This is the main module for the interval-valued function calculus application.
It provides a command-line interface to:
- Apply the lower and upper Baire operators and the graph completion operator
  to function spec files
- Check segment- and Hausdorff-continuity, optionally against a brute-force oracle
- Sweep the beta example and the shock wave solution to CSV
- Measure the PDE residual of the shock wave solution
- Run the property test suites

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import sys
from src.cli import main as cli_main


def main():
    """
    Run the command given on the command line and exit with its exit code.
    """
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
