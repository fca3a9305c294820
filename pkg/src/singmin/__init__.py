"""Toolkit for alpha-singular minimal surfaces.

Exact machine replay of the constant-curvature classification arguments over a
rational-function field, numeric evaluation of the defining curvature identity
on parametric surfaces, and generation of the cylindrical examples by
integrating the planar generating-curve equation.
"""
__version__ = "0.1.0"
