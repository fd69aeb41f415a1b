"""jscity: render a JavaScript codebase as a navigable 3D code city.

Directories become districts, files sub-districts, and functions
buildings whose height encodes lines of code and whose footprint
encodes declared-variable counts; nested functions stack on their
enclosing function's roof.
"""

__version__ = "0.1.0"
