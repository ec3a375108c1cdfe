"""Records-routing e-management service for a departmental foundation."""

__version__ = "0.1.0"
