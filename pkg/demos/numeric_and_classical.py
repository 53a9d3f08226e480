"""Numeric backend (roots of unity) and the classical q=1 chart.

Run:  python3 demos/numeric_and_classical.py
"""

import numpy as np

from glq.classical import (
    PositiveParam,
    haar_density_check,
    initial_minors_classical,
    lusztig_matrix,
    params_from_minors,
)
from glq.numeric import braid_phi_report, reduced_words, word_chart

print("reduced-word charts at N=3, clock/shift dimension d=7:")
for w in reduced_words(3):
    rep = word_chart(w, d=7)
    print(f"  word {rep['word']}: pass={rep['pass']}, "
          f"minor residual {rep['minor_residual']:.1e}, "
          f"rounding slack {rep['max_rounding_deviation']:.1e}")

rep = braid_phi_report(7, samples=50, seed=0)
print(f"\nbraid 3-move identities at d=7 over 50 random triples: "
      f"pass={rep['pass']}, residuals "
      + ", ".join(f"{k}={v:.1e}" for k, v in rep["residuals"].items()))

print("\nclassical q=1 chart:")
rng = np.random.default_rng(0)
N = 4
p = PositiveParam.random(N, rng)
g = lusztig_matrix(p)
x = initial_minors_classical(g)
p2 = params_from_minors(x, N)
err = max(abs(p.vector() - p2.vector()) / p.vector())
print(f"  N={N}: all {len(x)} initial minors positive: "
      f"{all(v > 0 for v in x.values())}; parameter round-trip error {err:.1e}")

h = haar_density_check(2, samples=30, seed=1)
print(f"  invariant-density cross check at N=2: corrected spread "
      f"{h['corrected_ratio_spread']:.1e} (constant: {h['corrected_constant']}),"
      f" literal ratio constant: {h['literal_constant']}")
