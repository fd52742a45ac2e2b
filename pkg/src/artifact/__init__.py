"""Weight-13 graph complex GK^{12,1}_{g,n}: enumeration, differential and cohomology."""
from __future__ import annotations

__version__ = "0.1.0"
