"""Invariantes de resolubilidad de grafos: β, ψ, sdim y β̂."""

__version__ = "1.0.0"
