"""Sweep every connected poset up to four elements over Q and GF(2).

Each line reports, per isomorphism class, the parameter counts and how
many generated Lie automorphisms were accepted.  The final line is PASS
when the decision procedure agreed with direct checking everywhere.
"""

from homlie.sweep import run_verify_sweep

report = run_verify_sweep(max_size=4, fields=("Q", "p=2"), trials=20, seed=0)
print(report.render())
