"""Regenerates the CLI fixture files in this directory.

    python3 make_fixtures.py
"""
import json
import math


def write(name, xs, vs):
    with open(name, "w") as fh:
        fh.write("x,value\n")
        for x, v in zip(xs, vs):
            fh.write(f"{x},{v!r}\n")


# [0, 1.2] with step 1e-4
xs = [f"{i / 10000:.4f}" for i in range(12001)]
write("u1.csv", xs, [1.0 if i <= 10000 else 0.0 for i in range(12001)])
write("u_half.csv", xs, [2.0 if i <= 5000 else 0.0 for i in range(12001)])
write("u_far.csv", xs, [2.5 if i >= 8000 else 0.0 for i in range(12001)])

# [0, 2.4] with step 2e-4: same support as u_half, coarser grid
xs2 = [f"{i / 5000:.4f}" for i in range(12001)]
write("u_half_coarse.csv", xs2, [2.0 if i <= 2500 else 0.0 for i in range(12001)])

# smooth pair on [-10, 10], n = 4001
xs3 = [f"{-10 + i * 0.005:.3f}" for i in range(4001)]


def normal(x, m, s):
    return math.exp(-0.5 * ((x - m) / s) ** 2) / (s * math.sqrt(2 * math.pi))


write("smooth_f.csv", xs3, [normal(float(x), 0.0, 1.0) for x in xs3])
write("smooth_g.csv", xs3, [normal(float(x), 0.5, 1.2) for x in xs3])

with open("bad_spacing.csv", "w") as fh:
    fh.write("x,value\n0,1\n0.1,1\n0.25,1\n0.3,1\n")
with open("bad_header.csv", "w") as fh:
    fh.write("pos,density\n0,1\n1,1\n")

gens = {
    "power_a1.json": {"kind": "power", "params": {"K": 1, "alpha": 1}},
    "power_shifted.json": {"kind": "power", "params": {"K": 2, "alpha": 0.5, "K2": 3, "K3": -1}},
    "dpd_a1.json": {"kind": "dpd", "params": {"alpha": 1}},
    "exp.json": {"kind": "exp", "params": {}},
    "cosh.json": {"kind": "cosh", "params": {}},
    "shiftedlog.json": {"kind": "shiftedlog", "params": {}},
    "bad_kind.json": {"kind": "quartic", "params": {}},
}
for name, spec in gens.items():
    with open(name, "w") as fh:
        json.dump(spec, fh)
        fh.write("\n")
