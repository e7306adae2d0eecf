"""Walking down to a minimal sober topology.

While the specialization order has a noncomparable pair, the coarsening
at that pair keeps the space sober and strictly shrinks it.  The walk ends
at the upper-set topology of a total order.
"""

# %% Start from the discrete topology on four points
from toposcope import discrete, minimal_sober_certificate, tau_star
from toposcope.finspace import specialization

T = discrete(4)
step = 0
while True:
    verdict = minimal_sober_certificate(T)
    print(f"step {step}: {len(T.opens):2d} opens, verdict {verdict.verdict}")
    if verdict.minimal:
        break
    T = tau_star(T, verdict.witness)
    step += 1

# %% The end point is a chain
print("specialization order:", specialization(T))
print("opens:", T)
