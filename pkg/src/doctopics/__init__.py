"""Comparative analytics for collections of similarly structured documents."""

__version__ = "0.1.0"
