"""
aslkit core package
"""
