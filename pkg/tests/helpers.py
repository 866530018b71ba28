"""Shared test oracles and the canonical CLI invocation list.

Everything here is deliberately independent of the package internals: the
oracles recompute expected values by a different algorithm than the code
under test.
"""

from __future__ import annotations

import cmath
import math
import subprocess
import sys

import numpy as np


def pascal_binomial(n: int, r: int) -> int:
    """Additive Pascal-triangle recurrence."""
    if r < 0 or r > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[r]


def factorial_multinomial(n: int, parts) -> int:
    denom = 1
    for p in parts:
        denom *= math.factorial(p)
    return math.factorial(n) // denom


def brute_totient(k: int) -> int:
    return sum(1 for n in range(k) if math.gcd(n, k) == 1)


def bitmask_compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of n by cutting at gap bitmasks, sorted lexicographically."""
    out = []
    for mask in range(1 << (n - 1)):
        parts, run = [], 1
        for i in range(n - 1):
            if mask & (1 << i):
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out)


def s_sum_double_loop(m: int, chi) -> complex:
    """Independent double summation of (j/k)^m sum_mm chi(mm) e^(2 pi i mm j / k)."""
    k = chi.modulus
    total = 0j
    for j in range(1, k + 1):
        for mm in range(1, k + 1):
            total += (j / k) ** m * chi.values[mm % k] * cmath.exp(2j * math.pi * mm * j / k)
    return total


def l_reference(r: int, chi, N: int) -> complex:
    """Long plain truncation of sum chi(n)/n^r, coded independently (numpy
    over all n, character values by table lookup)."""
    vals = np.array(chi.values, dtype=complex)
    total = 0j
    block = 1 << 21
    for start in range(1, N + 1, block):
        ns = np.arange(start, min(start + block, N + 1), dtype=np.int64)
        total += complex(np.sum(vals[ns % chi.modulus] / ns.astype(np.float64) ** r))
    return total


def run_cli(args: list[str]) -> tuple[int, bytes, bytes]:
    """Run the CLI in a fresh interpreter; returns (exit, stdout, stderr)."""
    proc = subprocess.run(
        [sys.executable, "-m", "expsums", *args],
        capture_output=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


# Every CLI invocation exercised by the test suite; the determinism criterion
# runs each of these twice and demands byte-identical output.
CLI_CASES: list[list[str]] = [
    ["powersum", "--p", "3", "--k", "3", "--method", "recurrence"],
    ["powersum", "--p", "3", "--k", "10", "--method", "faulhaber"],
    ["powersum", "--p", "4", "--k", "10", "--method", "naive", "--json"],
    ["powersum", "--p", "5", "--method", "poly"],
    ["powersum", "--p", "3", "--method", "poly", "--json"],
    ["bernoulli", "--n", "2", "--method", "retrieve"],
    ["bernoulli", "--n", "1", "--method", "oracle", "--json"],
    ["bernoulli", "--table", "6", "--json"],
    ["compositions", "--n", "4"],
    ["compositions", "--n", "5", "--length", "3", "--json"],
    ["characters", "--k", "5", "--json"],
    ["characters", "--k", "8"],
    ["verify", "prop1", "--pmax", "3", "--kmax", "6", "--exact"],
    ["verify", "prop1", "--pmax", "3", "--kmax", "12", "--float", "--json"],
    ["verify", "eq3", "--pmax", "3", "--kmax", "5", "--json"],
    ["verify", "coeffs", "--pmax", "6"],
    ["verify", "alkan", "--k", "5", "--r", "2", "--json"],
    ["verify", "alkan", "--k", "12", "--r", "2", "--include-imprimitive"],
]
