"""
Classical NIM as hypergraph NIM
===============================

Singleton edges give ordinary NIM, whose SG values are nim-sums.
"""

from hypernim import make_symmetric, nim_sum, sg_on_box, u_of

H = make_symmetric(3, [1])
table = sg_on_box(H, (3, 3, 3))

for x in [(1, 2, 3), (1, 1, 0), (3, 2, 2)]:
    print(x, "sg =", table[x], "nim-sum =", nim_sum(x))

# NIM is transversal-free but not JM: the closed form gives the longest play
# on long positions, which is the pile total here, not the nim-sum.
b = u_of(H, (1, 2, 3))
print("JM breakdown at (1,2,3):", b.to_dict())
