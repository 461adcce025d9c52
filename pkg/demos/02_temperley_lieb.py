# %% [markdown]
# Temperley-Lieb diagrams and immanants
#
# Basis elements of TL_n are noncrossing matchings on 2n points.  Vertices
# 1..n sit on the bottom edge, n+1..2n on the top edge read right to left.

# %%
from schurpos import catalan_basis, theta_expand, tl_from_word
from schurpos.immanants import GenJacobiTrudi, haiman_positivity_check, minor, minor_product_decomposition
from schurpos.temperley_lieb import Permutation

for n in range(1, 7):
    print(n, len(catalan_basis(n)))

print(tl_from_word([1, 3, 2], 4))  # (1)*[(1,2) (3,4) (5,8) (6,7)]
print(tl_from_word([1, 2, 2, 3, 2], 4))  # one closed loop, so a factor xi

# %%
# f_w(v): coefficients of (t_i1 - 1)...(t_il - 1) at xi = 2
for m, c in sorted(theta_expand(Permutation((3, 2, 1))).items()):
    print(f"{c:+d}  {m}")

# %%
# minors of a matrix against sums of TL immanants
x = [[3, -1, 4], [1, 5, -9], [2, 6, 5]]
report = minor_product_decomposition(x, [1, 3], [2, 3])
print(report.to_json())

# %%
# TL immanants of a Jacobi-Trudi matrix are Schur nonnegative
rep = haiman_positivity_check((3, 1), (1, 0), 2)
for w, imm in rep.immanants.items():
    print(w, "->", imm)

# %%
# minors of H = (h_{j-i}) are skew Schur functions
print(minor(GenJacobiTrudi.standard(4), [1, 2], [2, 4]))  # s[2,1]
