"""Brute-force reference computations, deliberately independent of entgeom internals."""

import itertools
import math

import numpy as np


def digits_of(index, dims):
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def partial_trace_loops(amps, dims, keep):
    """rho[i, i'] = sum over traced digits of psi[..i..] conj(psi[..i'..]) by explicit enumeration."""
    keep = sorted(keep)
    d_keep = math.prod(dims[k] for k in keep)
    rho = np.zeros((d_keep, d_keep), dtype=complex)
    for x in range(len(amps)):
        dx = digits_of(x, dims)
        for y in range(len(amps)):
            dy = digits_of(y, dims)
            if any(dx[k] != dy[k] for k in range(len(dims)) if k not in keep):
                continue
            i = 0
            j = 0
            for k in keep:
                i = i * dims[k] + dx[k]
                j = j * dims[k] + dy[k]
            rho[i, j] += amps[x] * np.conj(amps[y])
    return rho


def wedge_sum_loops(columns):
    """sum_{j<k} sum_{a<b} |u_a v_b - u_b v_a|^2 with plain Python complex arithmetic."""
    total = 0.0
    for u, v in itertools.combinations(columns, 2):
        for a, b in itertools.combinations(range(len(u)), 2):
            z = complex(u[a]) * complex(v[b]) - complex(u[b]) * complex(v[a])
            total += z.real**2 + z.imag**2
    return total


def post_measurement_loops(amps, dims, focus):
    """chi_j[i] = amplitude of (focus digits i, complement digits j), built by enumeration."""
    focus = sorted(focus)
    rest = [k for k in range(len(dims)) if k not in focus]
    d_a = math.prod(dims[k] for k in focus)
    d_b = math.prod(dims[k] for k in rest)
    chis = [[0j] * d_a for _ in range(d_b)]
    for x, c in enumerate(amps):
        dx = digits_of(x, dims)
        i = 0
        for k in focus:
            i = i * dims[k] + dx[k]
        j = 0
        for k in rest:
            j = j * dims[k] + dx[k]
        chis[j][i] = complex(c)
    return chis


def eig2_hermitian(rho):
    """Closed-form eigenvalues of a 2x2 Hermitian matrix."""
    a, d = rho[0, 0].real, rho[1, 1].real
    b = abs(rho[0, 1])
    mid, rad = (a + d) / 2, math.sqrt(((a - d) / 2) ** 2 + b**2)
    return mid - rad, mid + rad


def shannon_bits(ps):
    return -sum(p * math.log2(p) for p in ps if p > 0)
