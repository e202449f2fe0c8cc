"""qgw - Weak Hopf algebras, bialgebroids and the Galois theory of field extensions over Q."""

__version__ = "0.1.0"
