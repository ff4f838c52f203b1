"""Multilevel atoms as polarization-dependent scatterers.

Jones-vector transfer tensors, optical-pumping steady states, and the
radiation forces behind sub-Doppler laser cooling.
"""

try:
    from ._polscat import *  # noqa: F401,F403
    from ._polscat import __version__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree builds put the module on sys.path
    from _polscat import *  # noqa: F401,F403
    from _polscat import __version__  # noqa: F401
