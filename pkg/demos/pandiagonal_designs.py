#!/usr/bin/env python3
"""Squares that stay Latin along every wrapped diagonal.

Pandiagonal Latin squares exist exactly when the order is coprime to 6.
Where they exist, the diagonal constraints shave one notch off the
distance ceiling: the maximum inner distance drops from (n-1)/2 to
(n-3)/2, and the drop is forced because a +-(n-1)/2 increment pattern
makes one main diagonal constant.
"""

from latindist import (NonexistenceError, format_grid_text, inner_distance,
                       known_bounds, pandiagonal_max, validate_pandiagonal)

print("order | exists | max inner distance")
print("------+--------+-------------------")
for n in range(4, 14):
    entry = known_bounds("pandiagonal", n=n)
    if entry.existence:
        grid = pandiagonal_max(n)
        assert validate_pandiagonal(grid).verdict
        print(f"{n:5d} |  yes   | {inner_distance(grid).inner_distance}")
    else:
        print(f"{n:5d} |  no    | -")

print("\nAttempting a forbidden order raises a nonexistence error, distinct")
print("from ordinary parameter errors:")
try:
    pandiagonal_max(9)
except NonexistenceError as exc:
    print(" ", exc)

n = 11
print(f"\nThe order-{n} design with inner distance {(n - 3) // 2}:\n")
print(format_grid_text(pandiagonal_max(n)))
print("Following any forward diagonal steps by +1 and any back diagonal by")
print("+2 (mod 11), so all 22 wrapped diagonals carry all 11 symbols.")
