"""
Tetris values and slow moves
============================

The Tetris value is the length of the longest play.  For symmetric
hypergraphs with smallest edge size k and a sorted position with all piles
positive, a slow move on {1..k} shortens the longest play by exactly one.
The second edge matters: replacing pile 1 by pile n can fail, while
replacing pile k by pile n did not fail on any box tried here.
"""

import numpy as np

from hypernim import make_symmetric, slow_move, tetris_on_box, tetris_value
from hypernim.verify import check_tetris_lemmas

H = make_symmetric(4, [2])
T = tetris_on_box(H, (3, 3, 3, 3))
print("largest Tetris value on [0,3]^4:", T.max())
print("distribution:", np.bincount(T.ravel()))

x = (3, 1, 1, 1)
for edge in [{1, 2}, {2, 4}, {1, 4}]:
    y = slow_move(x, edge)
    print(f"T{x} = {tetris_value(H, x)}, slow move on {sorted(edge)} -> {y}: T = {tetris_value(H, y)}")

rep = check_tetris_lemmas(H, (3, 3, 3, 3))
for d in rep.details:
    print(f"{d['subject']:26s} {d['outcome']:6s} {d['witness'] or ''}")
