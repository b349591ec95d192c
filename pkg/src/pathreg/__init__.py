"""Edge and path ideals of graphs: exact Betti numbers, regularity, and
computational checks of regularity bounds for gap-free graphs."""

__version__ = "0.1.0"
