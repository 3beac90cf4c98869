"""
Which orders are reached
========================

"""

from hadamard_forge import catalog

rows = catalog.coverage(50)
print(catalog.render_coverage(rows))

unreached = [r.order for r in rows if not r.reached]
print("unreached up to 200:", unreached)
