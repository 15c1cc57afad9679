"""
Newton Strata
=============
Exact combinatorics of Newton strata for unramified Res GL, GSp and GU:
the Kottwitz set B(G, mu), defects, stratum and Rapoport-Zink dimensions,
Ekedahl-Oort truncations and superbasic EL-charts.
"""

__version__ = "0.1.0"
__author__ = "Newton Strata Project"
