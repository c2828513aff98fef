"""Brute-force evaluators used as independent oracles in the tests."""
from qnalg.laurent import ZERO


def qn_word_apply(word, k):
    """Act on e_k with generator letters one at a time (rightmost first).

    Letters: ('u', l) for u^l, ('w', m), ('w*', m).
    """
    for kind, v in reversed(word):
        if k is None:
            return None
        if kind == "u":
            k = k + v
        elif kind == "w":
            k = k * v
        elif k % v == 0:
            k = k // v
        else:
            k = None
    return k


def nt_word_apply(word, j, r):
    for kind, v in reversed(word):
        if kind == "u":
            j = j + v
        elif kind == "w":
            j, r = j * v, r * v
        elif j % v == 0 and r % v == 0:
            j, r = j // v, r // v
        else:
            return None
    return j, r


def mono_word(mono):
    a, m, n, b = mono
    return [("u", a), ("w", m), ("w*", n), ("u", -b)]


def qn_apply_brute(x, k):
    out = {}
    for mono, c in x.items():
        kk = qn_word_apply(mono_word(mono), k)
        if kk is not None:
            out[kk] = out.get(kk, ZERO) + c
    return {key: v for key, v in out.items() if v}


def nt_apply_brute(x, j, r):
    out = {}
    for mono, c in x.items():
        img = nt_word_apply(mono_word(mono), j, r)
        if img is not None:
            out[img] = out.get(img, ZERO) + c
    return {key: v for key, v in out.items() if v}
