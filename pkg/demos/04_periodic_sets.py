"""Infinite examples through ultimately periodic sets and residue classes."""

# %% Ultimately periodic sets
from toposcope.symnat import (
    BasicOpen,
    Congruence,
    UPSet,
    cofinite_join_witness,
    cofinite_not_sober_certificate,
    crt_solve,
    meet_chain_irreducibility_witness,
    primorial_gap_certificate,
    t2_separation,
)

S = UPSet.residue_class(1, 3) & UPSet.residue_class(2, 5) & UPSet.residue_class(3, 7)
print("[1]_3 & [2]_5 & [3]_7 =", S, "; contains 52:", 52 in S)
print("complement of (evens | {1}):", ~(UPSet.residue_class(0, 2) | UPSet.finite([1])))

# %% Chinese remainder theorem
print("x = 2 mod 3, x = 3 mod 5:", crt_solve([Congruence(2, 3), Congruence(3, 5)]))
print("x = 1 mod 4, x = 2 mod 6:", crt_solve([Congruence(1, 4), Congruence(2, 6)]))

# %% Hausdorff separation along the chain of prime topologies
U, V = t2_separation(1, 2, 5)
print("\nseparating 2 and 5:", U, V)

# %% Any two nonempty basic opens of the meet still intersect
B1, B2 = BasicOpen.of((1, 2)), BasicOpen.of((2, 3), (4, 5))
print("common point of", B1, "and", B2, "->", meet_chain_irreducibility_witness(B1, B2))

# %% The closed set {0} plus primorials
cert = primorial_gap_certificate(4, 3)
print("\nneighbourhood of 4 avoiding the primorials:", cert)

# %% The cofinite topology on the positive integers
U = UPSet.cofinite([1, 2], start=1)
V1, V2 = cofinite_join_witness(U)
print("\nU =", U)
print("V1 =", V1)
print("V2 =", V2)
print(cofinite_not_sober_certificate(sample=6))
