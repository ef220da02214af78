"""Brute-force blade product oracle, independent of the bitmask fast path.

Blades are kept as explicit 1-based generator index lists; the product is
normalized by adjacent transpositions (each flipping the sign) and by
contracting equal neighbours with their metric sign.
"""


def _indices(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def oracle_blade_mul(a_mask, b_mask, p):
    """Return (sign, mask) for e_a * e_b in a signature with p plus-generators."""
    work = _indices(a_mask) + _indices(b_mask)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(work):
            if work[i] > work[i + 1]:
                work[i], work[i + 1] = work[i + 1], work[i]
                sign = -sign
                changed = True
            elif work[i] == work[i + 1]:
                if work[i] > p:
                    sign = -sign
                del work[i : i + 2]
                changed = True
            else:
                i += 1
    mask = 0
    for idx in work:
        mask |= 1 << (idx - 1)
    return sign, mask
