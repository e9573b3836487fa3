"""Generators acting slot by slot on pure tensors, for calibrating the
straightening rule."""


def raw_tensor_action(sig, words, kind, a):
    """Single E_a or F_a on a pure tensor of basis vectors, one tensor slot
    per basis vector, using Delta(E) = 1(x)E + E(x)K_{a+1,a} and
    Delta(F) = F(x)1 + K_{a,a+1}(x)F.  Returns [(words, q-exponent)]."""
    slots = []
    for k, word in enumerate(words):
        is_w = k == sig.s and sig.is_super
        for x in word:
            slots.append((k, x, is_w))

    def k_exp(x, is_w):
        e = (x == a) - (x == a + 1)
        return -e if is_w else e

    out = []
    for t, (k, x, is_w) in enumerate(slots):
        if kind == "F":
            src, dst = ((a + 1, a) if is_w else (a, a + 1))
        else:
            src, dst = ((a, a + 1) if is_w else (a + 1, a))
        if x != src:
            continue
        if kind == "F":
            exp = sum(k_exp(y, w) for _, y, w in slots[:t])
        else:
            exp = -sum(k_exp(y, w) for _, y, w in slots[t + 1:])
        new = [list(wd) for wd in words]
        pos = t - sum(len(words[j]) for j in range(k))
        new[k][pos] = dst
        out.append((new, exp))
    return out
