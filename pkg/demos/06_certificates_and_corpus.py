"""Certificates: structural simplicity statements run on concrete instances.

Each pipeline verifies its premises, states a conclusion, and cross-checks
it against the brute-force oracle; the built-in corpus requires the two to
agree everywhere both exist.
"""

from ringlab import (certify_crossed_product, certify_matrix, certify_tower,
                     cross_check_corpus, matrix_ring, zmod_ring)
from ringlab.corpus import build_f4_frobenius_ring, tower_q

cert = certify_crossed_product(build_f4_frobenius_ring(), instance="F4xZ2")
print(f"[{cert.instance}] {cert.statement}")
for p in cert.premises:
    print("   ", p)
print("    verdict:", cert.verdict, " oracle:", cert.oracle)

cert = certify_matrix(matrix_ring(2, zmod_ring(4)), instance="M2(Z4)")
print(f"[{cert.instance}] verdict: {cert.verdict}  oracle: {cert.oracle}")
for note in cert.notes:
    print("   ", note)

print("doubling tower over Q:")
for c in certify_tower(tower_q(4)):
    print(f"    {c.instance}: {c.verdict} (conditional={c.conditional}, "
          f"oracle={c.oracle})")

report = cross_check_corpus()
print(f"corpus: {len(report.entries)} instances, "
      f"{len(report.disagreements)} disagreements")
for e in report.entries:
    print(f"    {e.instance:28s} pipeline={str(e.pipeline_verdict):10s} "
          f"oracle={e.oracle_verdict:12s} {e.agreement}")
