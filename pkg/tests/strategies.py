from hypothesis import strategies as st

from fockcan.weights import dominant_conjugate


def dominant_weights(sig, lo, hi):
    """Dominant weights with values in [lo, hi]."""
    ranges = sig.block_ranges()
    parts = [st.sets(st.integers(lo, hi), min_size=b - a, max_size=b - a) for a, b in ranges]

    def build(blocks):
        return dominant_conjugate(sig, [v for blk in blocks for v in blk])

    return st.tuples(*parts).map(build)
