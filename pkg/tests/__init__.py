"""
Test package for the varietas workbench.
"""
