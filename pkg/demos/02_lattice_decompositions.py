"""Joins and meets of sober topologies in the lattice of all topologies.

The discrete topology is a join of coarser sober topologies, and every
topology is a meet of finer sober ones.
"""

# %% The discrete topology as a join
from toposcope import (
    discrete,
    join,
    make_topology,
    meet,
    meet_sober_decomposition,
    t1_join_decomposition,
    tau_A,
)
from toposcope.constructions import alexandroff_meet_decomposition
from toposcope.order import alexandroff_topology, chain

D3 = discrete(3)
t = tau_A(D3, {0}, 0, 1)
print("tau_A with A={0}, xA=0, yA=1:", t)
fam = t1_join_decomposition(D3)
print(f"{len(fam)} sober pieces; their join is discrete: {join(fam) == D3}")

# %% A non-T0 topology as a meet of sober refinements
T = make_topology(3, [0, 0b011, 0b111])
dec = meet_sober_decomposition(T)
print("\ninput:", T)
for A, stage in sorted(dec.stages.items()):
    print(f"  non-closed set {A:03b}: refined by {stage[0]} at points {stage[1:]}")
print("meet of the family equals the input:", meet(dec.family) == T)

# %% Upper-set topologies decompose along single order pairs
C = chain(3)
parts = alexandroff_meet_decomposition(C)
for p in parts:
    print("  factor:", p)
print("meet equals the chain's upper-set topology:", meet(parts) == alexandroff_topology(C))
