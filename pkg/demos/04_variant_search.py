"""
Searching sign, transpose and swap variants
===========================================

"""

from hadamard_forge import theorems

params = theorems.validate_params("3.4", 7)
report = theorems.scan_variants(params, budget=512)
print(report.lines()[-1])
for r in report.passes:
    print("PASS", r.n_spec.text, "with M", r.m_spec.text)

# the third family needs a larger budget to exhaust the crossed family
params = theorems.validate_params("3.3", 11)
report = theorems.scan_variants(params, budget=2048)
print(report.lines()[-1])

# a passing grid pair can be rebuilt directly
best = report.passes[0]
again = theorems.construct(params, best.n_spec, best.m_spec)
print(again.summary())
