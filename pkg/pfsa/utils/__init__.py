# Makes pfsa.utils a Python package for proper imports
