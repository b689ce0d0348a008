"""Regenerate the shipped Conway polynomial table from the definition."""
import sys
sys.path.insert(0, "src")
from charquot.gf import compute_conway, is_prime

ENTRIES = []
for p in [x for x in range(2, 300) if is_prime(x)]:
    ENTRIES.append((p, 1))
for p, dmax in [(2, 13), (3, 8), (5, 5), (7, 4), (11, 3), (13, 3)]:
    for d in range(2, dmax + 1):
        ENTRIES.append((p, d))
for p in [x for x in range(17, 128) if is_prime(x)]:
    ENTRIES.append((p, 2))

lines = ["# Conway polynomials: p d c0 c1 ... cd (little-endian, monic)"]
for p, d in ENTRIES:
    f = compute_conway(p, d)
    lines.append(f"{p} {d} " + " ".join(str(c) for c in f))
open("src/charquot/conway.txt", "w").write("\n".join(lines) + "\n")
print(f"wrote {len(ENTRIES)} entries")
