"""
Test package for the Protein Data Collector system.
"""