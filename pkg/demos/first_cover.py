"""Build a few covers, print them, and check them with the independent validator."""

from splitstar import construct, dcc_construct, DccRequest, validate_dcc
from splitstar.permutation import format_perm, parse


def show(cover):
    print(f"  c1 ({len(cover.c1)}): {' '.join(map(format_perm, cover.c1))}")
    if len(cover.c2) <= 24:
        print(f"  c2 ({len(cover.c2)}): {' '.join(map(format_perm, cover.c2))}")
    else:
        print(f"  c2 ({len(cover.c2)}): {' '.join(map(format_perm, cover.c2[:8]))} ...")


# smallest case: a triangle through 1234, the other 21 vertices on one cycle
u, v = parse("1234", 4), parse("2134", 4)
cover = construct(4, u, v, 3)
print("n=4, ell=3")
show(cover)
print("  valid:", validate_dcc(4, cover, u, v, 3).ok)

# one induction step: the trace names the case taken at each level
u, v = parse("12345", 5), parse("54321", 5)
cover, trace = dcc_construct(DccRequest(5, u, v, 37))
print("\nn=5, ell=37")
show(cover)
print("  trace:", "; ".join(map(str, trace)))
print("  valid:", validate_dcc(5, cover, u, v, 37).ok)

# two levels of recursion
u, v = parse("316254", 6), parse("425163", 6)
for ell in (3, 119, 120, 121, 360):
    cover, trace = dcc_construct(DccRequest(6, u, v, ell))
    ok = validate_dcc(6, cover, u, v, ell).ok
    print(f"\nn=6, ell={ell}: lengths {len(cover.c1)}/{len(cover.c2)}, valid={ok}")
    print("  trace:", "; ".join(map(str, trace)))
