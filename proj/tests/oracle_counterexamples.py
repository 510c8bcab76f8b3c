"""Independent brute-force oracle for the two frozen counterexamples.

Loads product tensors dumped by the CLI, recomputes the identities from
scratch in exact arithmetic over Q(w) (w a primitive cube root of unity)
and compares the lexicographically first failing tuple and its residual
with what the CLI reports.
"""

import itertools
import json
import subprocess
import sys
from fractions import Fraction

CLI = sys.argv[1]


class QW:
    """a + b*w with w^2 = -1 - w."""

    def __init__(self, a=0, b=0):
        self.a, self.b = Fraction(a), Fraction(b)

    def __add__(self, o):
        return QW(self.a + o.a, self.b + o.b)

    def __mul__(self, o):
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2
        ac, bd = self.a * o.a, self.b * o.b
        return QW(ac - bd, self.a * o.b + self.b * o.a - bd)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def literal(self):
        # w = z^8 = z^4 - 1 in Q(zeta_24), so a + b w = (a - b) + b z^4.
        c, d = self.a - self.b, self.b
        parts = []
        if c != 0:
            parts.append(str(c))
        if d != 0:
            mag = "z^4" if abs(d) == 1 else f"{abs(d)}*z^4"
            sign = "-" if d < 0 else ("+" if parts else "")
            parts.append(sign + mag)
        return "".join(parts) or "0"


W, WB, ONE = QW(0, 1), QW(-1, -1), QW(1, 0)


def dump(descriptor):
    out = subprocess.run(
        [CLI, "constants", "--algebra", descriptor, "--bracket", "product", "--output", "json"],
        capture_output=True, text=True, check=False,
    ).stdout
    spec = json.loads(out)["constants"]
    d = spec["dim"]
    table = {}
    for e in spec["product"]:
        value = e["value"]
        assert "z" not in value, "oracle handles rational tensors only"
        table.setdefault((e["i"] - 1, e["j"] - 1, e["k"] - 1), []).append((e["m"] - 1, Fraction(value)))
    return d, table


def make_product(d, table):
    def product(x, y, z):
        out = [QW() for _ in range(d)]
        for (i, j, k), col in table.items():
            if x[i].is_zero() or y[j].is_zero() or z[k].is_zero():
                continue
            c = x[i] * y[j] * z[k]
            for m, v in col:
                out[m] = out[m] + c * QW(v)
        return out

    return product


def add(*vs):
    return [sum((v[t] for v in vs), QW()) for t in range(len(vs[0]))]


def scale(c, v):
    return [c * x for x in v]


def unit(d, t):
    return [ONE if s == t else QW() for s in range(d)]


def run_cli(args):
    return json.loads(subprocess.run([CLI, *args, "--output", "json"], capture_output=True, text=True).stdout)


def check_kind1():
    d, table = dump("cubic:n=2,pairing=A")
    p = make_product(d, table)
    first = None
    for tup in itertools.product(range(d), repeat=5):
        s, u, v, x, y = (unit(d, t) for t in tup)
        left = p(p(s, u, v), x, y)
        mid = p(s, p(u, v, x), y)
        right = p(s, u, p(v, x, y))
        r = add(left, scale(QW(-1), mid))
        if all(c.is_zero() for c in r):
            r = add(mid, scale(QW(-1), right))
        if not all(c.is_zero() for c in r):
            first = (tup, [c.literal() for c in r])
            break
    report = run_cli(["assoc", "--algebra", "cubic:n=2,pairing=A", "--kind", "1"])["reports"][0]
    labels = [f"X{i}{j}{k}" for i in (1, 2) for j in (1, 2) for k in (1, 2)]
    expected_args = [labels[t] for t in first[0]]
    assert first[0] == (0, 0, 0, 2, 4), first
    assert report["counterexample"]["args"] == expected_args, (report, expected_args)
    assert report["counterexample"]["residual"] == first[1], (report, first)
    print("kind-1 counterexample agrees:", expected_args, first[1])


def check_random_ga():
    d, table = dump("custom:random-seed=7")
    p = make_product(d, table)

    def br(s, u, v):
        return add(p(s, u, v), scale(W, p(u, v, s)), scale(WB, p(v, s, u)),
                   p(v, u, s), scale(WB, p(u, s, v)), scale(W, p(s, v, u)))

    def four(a, b, c, dd, e):
        return add(br(br(a, b, c), dd, e), br(br(a, dd, b), e, c),
                   br(br(a, e, dd), c, b), br(br(a, c, e), b, dd))

    first = None
    for tup in itertools.product(range(d), repeat=5):
        args = [unit(d, t) for t in tup]
        total = add(*(four(*[args[(slot + k) % 5] for slot in range(5)]) for k in range(5)))
        if not all(c.is_zero() for c in total):
            first = (tup, [c.literal() for c in total])
            break
    report = run_cli(["axioms", "--algebra", "custom:random-seed=7"])["reports"][1]
    expected_args = [f"e{t + 1}" for t in first[0]]
    assert first[0] == (0, 0, 1, 1, 2), first
    assert first[1] == ["3*z^4", "-2*z^4", "-42*z^4"], first
    assert report["counterexample"]["args"] == expected_args, (report, expected_args)
    assert report["counterexample"]["residual"] == first[1], (report, first)
    print("random seed 7 GA(1,5) counterexample agrees:", expected_args, first[1])


if __name__ == "__main__":
    check_kind1()
    check_random_ga()
