"""
aslkit data package
"""
