"""
Command-line surface for qmds.
"""
