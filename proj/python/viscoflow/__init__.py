"""Viscous approximations of scalar conservation laws on bounded domains.

Python surface over the C++ core: grids and fields, the model catalog,
mollification, the explicit viscous solver with its estimate checks, exact
Riemann / Godunov references, entropy residuals and epsilon sweeps.
"""

from viscoflow._viscoflow import *  # noqa: F401,F403
from viscoflow._viscoflow import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
