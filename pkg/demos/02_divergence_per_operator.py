"""
How far does each operator move the parity network's outputs?
=============================================================

A recurrent 2-input network reads 4 bits and reports their parity. We
record its responses to all 16 sequences, then mutate it with each operator
and measure the divergence: the mean squared output change over the
archive.
"""
import numpy as np

from safemut.domains.parity import ParityDomain
from safemut.mutation import MutationConfig, mutate
from safemut.network import xavier_init

domain = ParityDomain()
arch = domain.arch
params = xavier_init(arch, np.random.default_rng(1))
parent = domain.evaluate(params)
print(f"{arch.param_count} parameters, parent fitness {parent.fitness:g} of 16")

# %%
# Control is plain Gaussian noise. The gradient variants rescale the same
# kind of draw per weight. SM-R searches for the magnitude that lands on a
# chosen divergence, so its strength is that divergence.
settings = [("CONTROL", 0.05), ("SM-R", 0.005), ("SM-G-ABS", 0.001), ("SM-G-SUM", 0.001), ("SM-G-SO", 0.001)]
for method, strength in settings:
    rng = np.random.default_rng(7)
    divs, kept = [], []
    for _ in range(20):
        child, report = mutate(arch, params, parent.archive, MutationConfig(method, strength), rng, measure=True)
        divs.append(report.divergence)
        kept.append(domain.evaluate(child).fitness == parent.fitness)
    print(f"{method:<9} strength {strength:<6g} median divergence {np.median(divs):.3g}  "
          f"fitness unchanged in {sum(kept)}/20")
