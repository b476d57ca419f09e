#!/usr/bin/env python3
"""
Varietas Workbench - Entry Point
Finite-instance workbench for regular languages, lattice bimodules and duality.
"""

import sys
import logging

# Load environment variables from .env file for local runs
try:
    from dotenv import load_dotenv

    load_dotenv()
except ImportError:
    # dotenv not installed, skip
    pass

from workbench.cli import LOG_FORMAT, main

# Configure logging
logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)


if __name__ == "__main__":
    sys.exit(main())
