"""
Minimal transversal-free spectra
================================

List the spectra whose symmetric hypergraph is minimal transversal-free, and
confirm the closed-form spectrum test against the definition for every
spectrum up to n = 12.
"""

from hypernim import enumerate_mtf_spectra
from hypernim.verify import verify_theorem2

for n in range(1, 9):
    print(n, [str(s) for s in enumerate_mtf_spectra(n)])

for n in range(1, 13):
    rep = verify_theorem2(n)
    print(f"n={n:2d}  {rep.checked:5d} spectra  {rep.outcome}")
