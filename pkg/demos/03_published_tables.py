"""Reproduce the published 4-element prediction-vs-reality tables and the
census summaries.

Run:  python demos/03_published_tables.py          (a few seconds)
      python demos/03_published_tables.py --full   (adds the censuses)
"""

import sys

from disthom.reproduce import (reproduce_paper_tables, reproduce_b1_grid,
                               reproduce_pair_census,
                               reproduce_spindle_census)

ok, text = reproduce_paper_tables()
print(text)
print()

ok, text = reproduce_b1_grid(span=1, n_max=4)   # the 81-point slice
print(text)

if "--full" in sys.argv:
    print()
    ok, text = reproduce_spindle_census()
    print(text)
    print()
    ok, text = reproduce_pair_census()
    print(text)
else:
    print("\n(pass --full for the spindle and pair censuses; several "
          "minutes)")
