"""
Varietas Workbench Package
Configuration, orchestration, verification suites and the command line.
"""

__version__ = "1.0.1"
