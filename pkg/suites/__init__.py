"""
aslkit verification suites package
"""
