"""
Sufficient conditions for the JM property
=========================================

Check the four conditions A0, B1, C2, C3 on a JM hypergraph and on a
non-JM one.
"""

from hypernim import make_symmetric
from hypernim.verify import check_conditions

cases = [
    (make_symmetric(5, [2, 3]), (3,) * 5),
    (make_symmetric(4, [1, 3]), (3,) * 4),
]
for H, bounds in cases:
    rep = check_conditions(H, bounds)
    print(H.descriptor(), rep.outcome)
    for d in rep.details:
        print("   ", d["subject"], d["outcome"], d["witness"] or "")
