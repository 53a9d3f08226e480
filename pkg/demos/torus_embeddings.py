"""Quantum-torus embeddings and the minimal torus count.

Run:  python3 demos/torus_embeddings.py
"""

from glq.charts import full_chart, upper_chart
from glq.tori import (
    commutation_rank,
    full_embedding,
    minimal_embedding,
    symplectic_reduce,
    upper_embedding,
)

print("minimal number of Weyl pairs needed to represent each chart:")
print("  N   upper (= floor(N^2/4))   full (= floor(N^2/2))")
for N in range(2, 7):
    _, up, _ = commutation_rank(upper_chart(N).sig)
    _, fu, _ = commutation_rank(full_chart(N).sig)
    print(f"  {N}   {up:>5}                    {fu:>4}")

N = 4
red = symplectic_reduce(upper_chart(N).sig.C)
print(f"\nsymplectic reduction certificate at N={N} (upper chart):")
print(f"  rank {red.rank}, kernel {red.kernel_dim}, divisors {red.divisors},"
      f" certificate verifies: {red.verify()}")

for name, emb in [
    ("closed-form upper", upper_embedding(N)),
    ("closed-form full", full_embedding(N)),
    ("reduction-derived minimal", minimal_embedding(upper_chart(N).sig)),
]:
    rep = emb.check()
    print(f"  {name} embedding preserves all relations: {rep['pass']}")

print("\nimages of the N=3 upper generators (q-prefactor, exponent vector):")
emb = upper_embedding(3)
for name, (qpow, exps) in zip(emb.source.names, emb.images):
    print(f"  {name} -> q^{qpow} * {exps}")
