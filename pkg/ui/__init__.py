"""
aslkit figures package
"""
