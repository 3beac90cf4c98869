"""
Assembling S (x) M + I (x) N
============================

"""

from hadamard_forge import theorems

for t, q in [("3.1", 5), ("3.1", 9), ("3.2", 7), ("3.2", 23)]:
    params = theorems.validate_params(t, q)
    result = theorems.construct(params)
    print(result.summary())

# parameter errors carry the reason
for t, q in [("3.1", 7), ("3.2", 15), ("3.1", 37)]:
    try:
        theorems.validate_params(t, q)
    except Exception as exc:
        print(f"{t} q={q}:", type(exc).__name__, exc)

# the printed grids of the other two families fail, with a witness
for t, q in [("3.3", 11), ("3.4", 7)]:
    result = theorems.construct(theorems.validate_params(t, q))
    print(result.summary())
