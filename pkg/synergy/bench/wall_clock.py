from timeit import default_timer as timer

NS_PER_SECOND = 1_000_000_000


def timed(fn, *args, **kwargs):
    """Call fn and return (result, elapsed wall time in nanoseconds)."""
    start = timer()
    result = fn(*args, **kwargs)
    end = timer()
    return result, int((end - start) * NS_PER_SECOND)
