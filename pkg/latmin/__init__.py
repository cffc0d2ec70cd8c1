"""Area-minimizing subgraphs of Zⁿ."""

__version__ = "0.1.0"
