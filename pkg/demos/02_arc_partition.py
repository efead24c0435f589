# %% [markdown]
# # Inverse arcs, brackets and the arc partition
#
# The looped triangle has ten arcs on three vertices: a doubled loop at v1,
# two parallel arcs each way between v1 and v2, and single arcs each way on
# v2-v3 and v1-v3.  In general mode every arc from v to u is an inverse of an
# arc from u to v.  In symmetric mode an explicit involution pairs them.

# %%
from ihara_zeta.digraph import arc_partition, bracket_set, inverse_set
from ihara_zeta.fixtures import LOOPED_TRIANGLE_LABELS as NAMES, looped_triangle


def names(ids):
    return sorted(NAMES[a] for a in ids)


for mode in ("general", "symmetric"):
    dg = looped_triangle(mode)
    print(mode, "a21^-1 =", names(inverse_set(dg, 2)), " [a21] =", names(bracket_set(dg, 2)))

# %% [markdown]
# The partition groups arcs into one block per representative.  General mode
# merges parallel arcs, so it has fewer blocks.

# %%
for mode in ("general", "symmetric"):
    p = arc_partition(looped_triangle(mode))
    print(f"{mode}: {len(p.blocks)} blocks")
    for b in p.blocks:
        u, v = b.pair
        print(f"  (v{u + 1},v{v + 1}) rep {NAMES[b.representative]}: bracket {names(b.bracket)} inverse {names(b.inverse)}")
