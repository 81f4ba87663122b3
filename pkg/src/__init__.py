"""Multi-speed firing squad synchronization toolkit."""

__version__ = "0.1.0"
