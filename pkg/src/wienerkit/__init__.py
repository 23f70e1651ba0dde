"""wienerkit: exhaustive computations around the Wiener index and its variants."""

from wienerkit.core import Graph, wiener

__version__ = "0.1.0"
__all__ = ["Graph", "wiener", "__version__"]
