"""Sobriety on a finite carrier.

Walks through closures, irreducible closed sets, and why every finite T0
space turns out to be sober.  Run with ``python demos/01_finite_sobriety.py``.
"""

# %% A few small spaces
from toposcope import (
    PropertyKind,
    check_property,
    closure,
    enumerate_topologies,
    indiscrete,
    irr_closed,
    make_topology,
    sierpinski,
    soberify,
)
from toposcope.finspace import format_set

S = sierpinski(1)
print("Sierpinski space:", S)
print("closure of {1}:", format_set(closure(S, {1})))
print("closure of {0}:", format_set(closure(S, {0})))
print("irreducible closed sets:", [format_set(c) for c in irr_closed(S)])

# %% The indiscrete pair is the smallest non-sober space
I2 = indiscrete(2)
print("\nindiscrete pair:", I2)
print("  irreducible closed sets:", [format_set(c) for c in irr_closed(I2)])
print("  both points have closure X, so the generic point is not unique")
print("  sober?", check_property(I2, PropertyKind.SOBER))

# %% Sober and T0 coincide on every finite space
for n in range(5):
    tops = enumerate_topologies(n)
    t0 = sum(check_property(t, PropertyKind.T0) for t in tops)
    sober = sum(check_property(t, PropertyKind.SOBER) for t in tops)
    print(f"n={n}: {len(tops):4d} topologies, {t0:4d} T0, {sober:4d} sober")

# %% Soberification of a T0 space is an isomorphic copy
T = make_topology(3, [0, 0b100, 0b110, 0b111])
sob = soberify(T)
print("\nchain space:", T)
print("carrier of the soberification:", [format_set(c) for c in sob.carrier])
print("point x goes to index", sob.point_map)
