"""carpetlab: Lipschitz invariants of Bedford-McMullen carpets"""

__version__ = "0.1.0"
