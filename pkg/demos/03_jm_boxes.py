"""
The JM formula on boxes
=======================

For every minimal transversal-free spectrum with 3 <= n <= 5, compare the JM
value with the exact SG value at every position of a box.  Other spectra
should show a mismatch somewhere.
"""

from hypernim.verify import verify_theorem1

bounds = {3: 6, 4: 5, 5: 3}
for n, b in bounds.items():
    rep = verify_theorem1(n, (b,) * n)
    print(f"n={n}, box [0,{b}]^{n}: {rep.outcome}")
    for d in rep.details:
        w = d["witness"]
        where = f" at {w['position']} (jm {w['expected']}, sg {w['actual']})" if w else ""
        print(f"    lambda={d['spectrum']}: {d['status']}{where}")
