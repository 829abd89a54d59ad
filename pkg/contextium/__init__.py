"""contextium: contextuality measures, uncertainty bounds and the KCBS spin-1 scenario."""

__version__ = "0.1.0"
