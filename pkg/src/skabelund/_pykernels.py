"""Pure-Python implementations of the lattice kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or when ``SKAB_PURE_PYTHON`` is set.

Conventions shared by every kernel: states are ``(A, B) = (a0 + u, b0 + v)``
with ``u, v >= 0`` and ``u + v <= n``; ``t[x - t_lo]`` is tau(x) and
``ti[y - ti_lo]`` is tau^-1(y); ``member[x]`` tells whether x is in H(P).
Output tables are ``(n + 1) x (n + 1)`` int64 arrays, zero above the
anti-diagonal ``u + v = n``.
"""

import numpy as np


def nu_table(t, t_lo, ti, ti_lo, member, a0, b0, n):
    """X[u, v] = #{i in H : tau(A + 1 - i) <= B}.

    Row ``v = 0`` is counted directly.  Raising B by one admits exactly one
    new j, namely tau^-1(B), which contributes iff A + 1 - j is a member.
    """
    t = t.tolist()
    ti = ti.tolist()
    member = member.tolist()
    out = [[0] * (n + 1) for _ in range(n + 1)]
    for u in range(n + 1):
        A = a0 + u
        row = out[u]
        cnt = 0
        off = A + 1 - t_lo
        for i in range(A + b0 + 2):
            if member[i] and t[off - i] <= b0:
                cnt += 1
        row[0] = cnt
        for v in range(1, n + 1 - u):
            x = A + 1 - ti[b0 + v - ti_lo]
            if x >= 0 and member[x]:
                cnt += 1
            row[v] = cnt
    return np.array(out, dtype=np.int64)


def dim_table(t, t_lo, ti, ti_lo, a0, b0, n, base):
    """D[u, v] = dim L(A P + B P_inf), given ``base`` = D[0, 0]."""
    t = t.tolist()
    ti = ti.tolist()
    out = [[0] * (n + 1) for _ in range(n + 1)]
    first = out[0]
    first[0] = base
    for v in range(1, n + 1):
        first[v] = first[v - 1] + (ti[b0 + v - ti_lo] <= a0)
    for u in range(1, n + 1):
        tA = t[a0 + u - t_lo]
        prev = out[u - 1]
        row = out[u]
        for v in range(n + 1 - u):
            row[v] = prev[v] + (tA <= b0 + v)
    return np.array(out, dtype=np.int64)


def bottleneck(t, t_lo, ti, ti_lo, nu_p, nu_pinf, a0, b0, n, floor):
    """Maximin value of every state over paths to the anti-diagonal u + v = n.

    A step to P from (A, B) matters iff tau(A + 1) <= B and then costs
    nu_p[u, v]; a step to P_inf matters iff tau^-1(B + 1) <= A and costs
    nu_pinf[u, v].  Terminal states are worth ``floor``.
    """
    t = t.tolist()
    ti = ti.tolist()
    np_ = nu_p.tolist()
    nq = nu_pinf.tolist()
    V = [[0] * (n + 1) for _ in range(n + 1)]
    for u in range(n + 1):
        V[u][n - u] = floor
    for d in range(n - 1, -1, -1):
        for u in range(d + 1):
            v = d - u
            A = a0 + u
            B = b0 + v
            vp = V[u + 1][v]
            if t[A + 1 - t_lo] <= B and np_[u][v] < vp:
                vp = np_[u][v]
            vq = V[u][v + 1]
            if ti[B + 1 - ti_lo] <= A and nq[u][v] < vq:
                vq = nq[u][v]
            V[u][v] = vp if vp > vq else vq
    return np.array(V, dtype=np.int64)
