# cython: language_level=3
"""Compiled search kernels; mirrors _pure exactly (see its docstrings)."""

import time


def line_min_range(fixed_masks, free_masks, unsigned long long start, unsigned long long stop):
    if stop <= start:
        raise ValueError("empty code range")
    cdef const unsigned long long[::1] fm = fixed_masks
    cdef const unsigned long long[::1] gm = free_masks
    cdef Py_ssize_t nf = fm.shape[0]
    cdef Py_ssize_t ng = gm.shape[0]
    cdef Py_ssize_t i
    cdef unsigned long long code, anded, best_code = start
    cdef long long red, blue, tot, bal
    cdef long long min_total = -1, opt_count = 0, min_balance = 0
    cdef long long best_red = 0, best_blue = 0
    with nogil:
        for code in range(start, stop):
            red = 0
            blue = 0
            for i in range(nf):
                if (code & fm[i]) == 0:
                    red += 1
            for i in range(ng):
                anded = code & gm[i]
                if anded == 0:
                    red += 1
                elif anded == gm[i]:
                    blue += 1
            tot = red + blue
            if min_total < 0 or tot < min_total:
                min_total = tot
                best_code = code
                opt_count = 1
                min_balance = red if red < blue else blue
                best_red = red
                best_blue = blue
            elif tot == min_total:
                opt_count += 1
                bal = red if red < blue else blue
                if bal < min_balance:
                    min_balance = bal
    return (min_total, best_code, opt_count, min_balance, best_red, best_blue)


def disjoint_min_small_range(fixed_masks, free_masks, disj_masks,
                             unsigned long long start, unsigned long long stop, int ub):
    cdef const unsigned long long[::1] fm = fixed_masks
    cdef const unsigned long long[::1] gm = free_masks
    cdef const unsigned long long[::1] dm = disj_masks
    cdef Py_ssize_t nf = fm.shape[0]
    cdef Py_ssize_t ng = gm.shape[0]
    if nf + ng != dm.shape[0]:
        raise ValueError("disjointness table does not match the triangle masks")
    cdef Py_ssize_t i, j
    cdef unsigned long long code, anded, mono_bits, one = 1
    cdef int have_pair, have_mono, pack
    cdef int bound = ub
    with nogil:
        for code in range(start, stop):
            if bound == 0:
                break
            if bound == 1:
                # only "is any triangle monochromatic" matters now
                have_mono = 0
                for i in range(nf):
                    if (code & fm[i]) == 0:
                        have_mono = 1
                        break
                if not have_mono:
                    for i in range(ng):
                        anded = code & gm[i]
                        if anded == 0 or anded == gm[i]:
                            have_mono = 1
                            break
                if not have_mono:
                    bound = 0
                continue
            mono_bits = 0
            have_pair = 0
            for i in range(nf):
                if (code & fm[i]) == 0:
                    if mono_bits & dm[i]:
                        have_pair = 1
                        break
                    mono_bits |= one << i
            if not have_pair:
                for i in range(ng):
                    anded = code & gm[i]
                    if anded == 0 or anded == gm[i]:
                        j = nf + i
                        if mono_bits & dm[j]:
                            have_pair = 1
                            break
                        mono_bits |= one << j
            if have_pair:
                pack = 2
            elif mono_bits:
                pack = 1
            else:
                pack = 0
            if pack < bound:
                bound = pack
    return bound


def disjoint_bnb(int n_edges, tri_a, tri_b, tri_c, tri_verts, last_start,
                 int ub, double budget_s=0.0,
                 unsigned long long prefix_bits=0, int prefix_len=0):
    if ub > 2:
        raise ValueError("pair-based pruning needs ub <= 2")
    if n_edges > 64:
        raise ValueError("at most 64 edges")
    if prefix_len < 0 or prefix_len > n_edges:
        raise ValueError("prefix length out of range")
    if prefix_len > 0 and (prefix_bits & 1):
        raise ValueError("edge 0 must be red in the prefix")
    cdef const int[::1] aa = tri_a
    cdef const int[::1] bb = tri_b
    cdef const int[::1] cc = tri_c
    cdef const unsigned long long[::1] vv = tri_verts
    cdef const long long[::1] starts = last_start
    if vv.shape[0] > 160:
        raise ValueError("at most 160 triangles")

    cdef signed char colors[64]
    cdef signed char next_color[64]
    cdef int sp_at[64]
    cdef unsigned long long mono_stack[160]
    cdef int sp = 0, d = 0, best = ub, forced = 0
    cdef int color, limit, pruned, hit
    cdef Py_ssize_t t, s2
    cdef unsigned long long vm
    cdef long long nodes = 0
    cdef bint aborted = False, timed = budget_s > 0
    cdef double t0 = time.monotonic()
    cdef Py_ssize_t e

    if n_edges == 0 or best == 0:
        return best, 0, True
    for e in range(n_edges):
        colors[e] = -1

    # preassigned prefix: feed its forced triangles through the same pruning
    for d in range(prefix_len):
        color = (prefix_bits >> d) & 1
        colors[d] = color
        for t in range(starts[d], starts[d + 1]):
            if colors[aa[t]] == color and colors[bb[t]] == color:
                vm = vv[t]
                for s2 in range(sp):
                    if (mono_stack[s2] & vm) == 0:
                        return best, 0, True  # >= 2 disjoint forced; cannot beat ub
                mono_stack[sp] = vm
                sp += 1
    forced = 1 if sp > 0 else 0
    if forced >= best:
        return best, 0, True
    if prefix_len == n_edges:
        return forced, 0, True

    d = prefix_len
    next_color[d] = 0
    with nogil:
        while d >= prefix_len:
            if best == 0 or aborted:
                break
            limit = 0 if d == 0 else 1
            if next_color[d] > limit:
                d -= 1
                if d >= prefix_len:
                    sp = sp_at[d]
                    colors[d] = -1
                continue
            color = next_color[d]
            next_color[d] += 1
            colors[d] = color
            sp_at[d] = sp
            nodes += 1
            if timed and (nodes & 65535) == 0:
                with gil:
                    if time.monotonic() - t0 > budget_s:
                        aborted = True
            if aborted:
                break
            pruned = 0
            for t in range(starts[d], starts[d + 1]):
                if colors[aa[t]] == color and colors[bb[t]] == color:
                    vm = vv[t]
                    hit = 0
                    for s2 in range(sp):
                        if (mono_stack[s2] & vm) == 0:
                            hit = 1
                            break
                    if hit:
                        pruned = 1
                        break
                    mono_stack[sp] = vm
                    sp += 1
            if not pruned:
                forced = 1 if sp > 0 else 0
                if forced >= best:
                    pruned = 1
            if pruned:
                sp = sp_at[d]
                colors[d] = -1
                continue
            if d == n_edges - 1:
                best = forced
                sp = sp_at[d]
                colors[d] = -1
                continue
            d += 1
            next_color[d] = 0

    return best, nodes, not aborted
