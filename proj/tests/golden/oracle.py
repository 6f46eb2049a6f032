"""Writes the golden .wsp files from a direct transcription of the step rules.

Independent of the C++ code; rerun only to regenerate the golden files.
"""
import itertools, pathlib

here = pathlib.Path(__file__).parent

def step(subsets, m):
    out = []
    for i, s in enumerate(subsets):
        t = set(s) | {3 * m + 4 - a for a in s if a > 4}
        if i == 0:
            t |= {m + 2, 2 * m + 2}
        out.append(t)
    out.append({m + j for j in [1] + list(range(3, m + 2)) + [m + 3]})
    return out, 3 * m - 1

def check(subsets, n):
    assert sorted(itertools.chain(*subsets)) == list(range(1, n + 1))
    for s in subsets:
        assert s and not any(a + b in s for a in s for b in s if a < b)

def write(name, subsets, n):
    lines = ["wsp 1", f"s={len(subsets)} n={n}"]
    lines += [f"{i}: " + " ".join(map(str, sorted(s))) for i, s in enumerate(subsets, 1)]
    (here / name).write_text("\n".join(lines) + "\n")

p3 = [{1, 2, 4, 8, 18}, {3, 5, 6, 7, 19, 20, 21}, set(range(9, 18))]
check(p3, 21)
write("p3_21.wsp", p3, 21)
p, m = p3, 21
for s in (4, 5):
    p, m = step(p, m)
    check(p, m)
    write(f"p{s}_{m}.wsp", p, m)
write("p1_2.wsp", [{1, 2}], 2)
