"""The nmpoly library for log-power expansions, decorated Newton
polygons, Mellin coefficients and the local Fourier transform"""

__version__ = '1.0.0'
__date__ = '2026-10-18'
