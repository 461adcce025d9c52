# %% [markdown]
# Schur products and the cell-transfer inequality
#
# Skew Schur functions are expanded exactly through Littlewood-Richardson
# fillings.  Moving cells between two shapes with the componentwise max/min
# never makes the product smaller in the Schur order.

# %%
from schurpos import SchurVector, is_schur_nonneg, parse_shape, schur_product, skew_schur_expand, vee_wedge
from schurpos.positivity import check_cell_transfer

print(skew_schur_expand(parse_shape("3,2/1")))  # s[3,1] + s[2,2]
print(schur_product(["2", "2"]))  # s[4] + s[3,1] + s[2,2]

# %%
a, b = parse_shape("2"), parse_shape("1,1")
hi, lo = vee_wedge(a, b)
print(hi, lo)  # 2,1 and 1
diff = schur_product([hi, lo]) - schur_product([a, b])
print(diff, is_schur_nonneg(diff))  # s[2,2] (True, None)

# %%
# the same thing, packaged
case = check_cell_transfer("4,2/1", "3,3/2")
print(case.difference)
print("nonnegative:", case.nonneg)

# %%
# a deliberately incomparable pair: the witness is the least negative term
print(is_schur_nonneg(SchurVector.schur((1, 1)) - SchurVector.schur((2,))))
