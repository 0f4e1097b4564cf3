"""
Command modules for the springeriso CLI.

Each module holds plain functions that the root app registers as commands.
"""
