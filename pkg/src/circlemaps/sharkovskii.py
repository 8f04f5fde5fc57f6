"""Sharkovskii order: 3, 5, 7, ..., 2*3, 2*5, ..., 4*3, ..., 8, 4, 2, 1."""


def _key(n):
    if n < 1:
        raise ValueError("periods are positive integers")
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if n > 1:
        return (0, twos, n)
    return (1, -twos, 0)


def sharkovskii_forces(m, n):
    """True when ``m`` precedes or equals ``n`` in the Sharkovskii order."""
    return _key(m) <= _key(n)


def sharkovskii_sorted(periods):
    return sorted(periods, key=_key)


def is_sharkovskii_tail(periods, N):
    """Every ``m <= N`` forced by a member of ``periods`` is a member too."""
    periods = set(periods)
    return all(m in periods
               for n in periods
               for m in range(1, N + 1)
               if sharkovskii_forces(n, m))
