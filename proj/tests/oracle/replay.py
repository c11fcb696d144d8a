#!/usr/bin/env python3
"""Independent big-integer replay of every registered generator.

Writes the golden vectors consumed by the acceptance suite. Nothing here
shares code with the C++ headers: every recurrence is replayed with Python's
arbitrary-precision integers and reduced explicitly.

    python3 tests/oracle/replay.py tests/golden
"""
import os
import sys

GOLDEN_SEED = 20170401
GOLDEN_COUNT = 10_000
MT_REFERENCE_SEED = 5489
MT_REFERENCE_COUNT = 1000

W64 = 1 << 64
W32 = 1 << 32

KNUTH_A = 6364136223846793005
KNUTH_C = 1442695040888963407


def expand_seed(seed, count):
    x = seed % W64
    for _ in range(16):
        x = (KNUTH_A * x + KNUTH_C) % W64
    out = []
    for _ in range(count):
        x = (KNUTH_A * x + KNUTH_C) % W64
        out.append(x if x != 0 else KNUTH_C)
    return out


def lcg(seed, n):
    x = seed
    for _ in range(n):
        x = (KNUTH_A * x + KNUTH_C) % W64
        yield x


def quad_cg(seed, n):
    a, b, d = 6364136223846793004, 6364136223846793005, 1442695040888963407
    x = seed
    for _ in range(n):
        x = (a * x * x + b * x + d) % W64
        yield x


def cubic_cg(seed, n):
    a, b, c, d = (6364136223846793004, 6364136223846793004,
                  6364136223846793005, 1442695040888963407)
    x = seed
    for _ in range(n):
        x = (a * x ** 3 + b * x ** 2 + c * x + d) % W64
        yield x


def lfg(seed, n):
    xs = expand_seed(seed, 55)
    for _ in range(n):
        v = (xs[-55] + xs[-24]) % W64
        xs.append(v)
        yield v


CMRG_M1 = 2147483647
CMRG_M2 = 2145483479
CMRG_A = (0, 63308, -183326)
CMRG_B = (86098, 0, -539608)


def cmrg(seed, n):
    w = expand_seed(seed, 6)
    xs = [v % CMRG_M1 for v in w[:3]]
    ys = [v % CMRG_M2 for v in w[3:]]
    if not any(xs):
        xs[2] = 1
    if not any(ys):
        ys[2] = 1
    for _ in range(n):
        xn = (CMRG_A[0] * xs[-1] + CMRG_A[1] * xs[-2] + CMRG_A[2] * xs[-3]) % CMRG_M1
        yn = (CMRG_B[0] * ys[-1] + CMRG_B[1] * ys[-2] + CMRG_B[2] * ys[-3]) % CMRG_M2
        xs.append(xn)
        ys.append(yn)
        yield (xn - yn) % CMRG_M1


MRG5_M = 2147483647


def mrg5(seed, n):
    xs = [v % MRG5_M for v in expand_seed(seed, 5)]
    if not any(xs):
        xs[4] = 1
    for _ in range(n):
        v = (107374182 * xs[-1] + 104480 * xs[-5]) % MRG5_M
        xs.append(v)
        yield v


def icg(seed, n):
    m, a, b = 2147483647, 9102, 36884165
    x = seed % m
    for _ in range(n):
        inv = pow(x, -1, m) if x != 0 else 0
        x = (a * inv + b) % m
        yield x


def xorshift_star(seed, n):
    x = seed
    for _ in range(n):
        x ^= x >> 12
        x ^= (x << 25) % W64
        x ^= x >> 27
        yield (x * 2685821657736338717) % W64


def xorshift_plus(seed, n):
    s1, s2 = expand_seed(seed, 2)
    for _ in range(n):
        x, y = s1, s2
        s1 = y
        x ^= (x << 23) % W64
        s2 = x ^ y ^ (x >> 17) ^ (y >> 26)
        yield (s2 + y) % W64


def _kiss_family(seed, n, lcg_a, lcg_c, shifts, mwc_a):
    w = [v >> 32 for v in expand_seed(seed, 4)]
    s0, s1, s2, s3 = w[0], w[1], w[2], w[3] % mwc_a
    if s1 == 0:
        s1 = 362436069
    if s2 == 0 and s3 == 0:
        s2 = 1
    l1, r, l2 = shifts
    for _ in range(n):
        s0 = (lcg_a * s0 + lcg_c) % W32
        s1 ^= (s1 << l1) % W32
        s1 ^= s1 >> r
        s1 ^= (s1 << l2) % W32
        t = mwc_a * s2 + s3
        s3 = t >> 32
        s2 = t % W32
        yield (s0 + s1 + s2) % W32


def kiss(seed, n):
    return _kiss_family(seed, n, 69069, 123456, (13, 17, 5), 698769069)


def jkiss(seed, n):
    return _kiss_family(seed, n, 314527869, 1234567, (5, 7, 22), 4294584393)


def mt64(seed, n):
    nn, mm = 312, 156
    matrix_a = 0xB5026F5AA96619E9
    um, lm = 0xFFFFFFFF80000000, 0x7FFFFFFF
    mt = [seed % W64]
    for i in range(1, nn):
        mt.append((6364136223846793005 * (mt[i - 1] ^ (mt[i - 1] >> 62)) + i) % W64)
    idx = nn
    for _ in range(n):
        if idx >= nn:
            for i in range(nn):
                x = (mt[i] & um) | (mt[(i + 1) % nn] & lm)
                xa = x >> 1
                if x & 1:
                    xa ^= matrix_a
                mt[i] = mt[(i + mm) % nn] ^ xa
            idx = 0
        x = mt[idx]
        idx += 1
        x ^= (x >> 29) & 0x5555555555555555
        x ^= (x << 17) & 0x71D67FFFEDA60000
        x ^= (x << 37) & 0xFFF7EEE000000000
        x ^= x >> 43
        yield x % W64


GENERATORS = {
    "lcg": lcg,
    "lfg": lfg,
    "cmrg": cmrg,
    "mrg5": mrg5,
    "icg": icg,
    "xorshift-star": xorshift_star,
    "xorshift-plus": xorshift_plus,
    "kiss": kiss,
    "jkiss": jkiss,
    "mt64": mt64,
    "quad-cg": quad_cg,
    "cubic-cg": cubic_cg,
}


def write(path, values):
    with open(path, "w", newline="\n") as f:
        for v in values:
            f.write(f"{v}\n")


def main(out_dir):
    os.makedirs(out_dir, exist_ok=True)
    for name, fn in GENERATORS.items():
        write(os.path.join(out_dir, f"{name}.txt"), fn(GOLDEN_SEED, GOLDEN_COUNT))
    write(os.path.join(out_dir, "mt64_reference_5489.txt"),
          mt64(MT_REFERENCE_SEED, MT_REFERENCE_COUNT))
    # gen --alg xorshift-star --seed 1 --count 5 --format dieharder-text
    with open(os.path.join(out_dir, "cli_gen_xorshift_star_seed1.txt"), "w", newline="\n") as f:
        f.write("type: d\ncount: 5\nnumbit: 64\n")
        for v in xorshift_star(1, 5):
            f.write(f"{v}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "golden"))
