"""Double Kostka polynomials K_{L,M}(t) indexed by pairs of partitions.

Modules: ``core`` (partitions, statistics, notation), ``poly`` (exact Laurent
polynomials), ``tableaux`` (charge, rectification, LR coefficients),
``symfunc`` (one-alphabet Hall-Littlewood data), ``double`` (Gram-Schmidt
in two alphabets), ``fake_degrees`` (the P Lambda P^T factorisation),
``hall`` (the Hall bimodule), ``fq`` (brute-force counts over F_q),
``verify`` (cross-check suites) and ``cli``.
"""
from __future__ import annotations

__version__ = "0.1.0"
