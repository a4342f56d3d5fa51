from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, max_size=6, max_len=None, min_size=0):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    parts = []
    rest = n
    while rest:
        if max_len is not None and len(parts) == max_len - 1:
            parts.append(rest)
            break
        top = min(rest, parts[-1] if parts else rest)
        parts.append(draw(st.integers(min_value=1, max_value=top)))
        rest -= parts[-1]
    # the forced last part may break monotonicity; sorting restores a partition
    return tuple(sorted(parts, reverse=True))
