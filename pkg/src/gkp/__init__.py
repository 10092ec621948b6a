"""Numerical toolkit for GKP qubit codes.

Lattice/patch geometry, symplectic Clifford algebra, Gaussian noise
channel estimates, approximate error correction, and homodyne readout
design, exposed both as a library and through the ``gkp`` command line
tool.
"""

__version__ = "0.1.0"
