"""How often does the Barrett quotient fall one short, as a function of margin?

k = bits + delta.  With a zero margin the shortfall is common; by delta = 32
it effectively vanishes.

Run: python demos/barrett_margin.py [trials]
"""

import sys

from hppkds.cryptanalysis import barrett_tail_experiment

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 20_000
print(f"{'bits':>5} {'delta':>5} {'tail':>7} {'fraction':>9}")
for bits in (208, 292, 400):
    for delta in (0, 8, 16, 24, 32):
        tail = barrett_tail_experiment(bits, delta, trials, seed=1)
        print(f"{bits:>5} {delta:>5} {tail:>7} {tail / trials:>9.5f}")
