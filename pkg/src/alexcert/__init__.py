"""Alexander polynomials of positive braid links and Hopf plumbings, with certificates."""

__version__ = "0.1.0"
