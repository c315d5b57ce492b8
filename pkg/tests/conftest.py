import math

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def naive_factor(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return sorted(out.items())


def naive_order(m, n):
    if n == 1:
        return 1
    t, x = 1, m % n
    while x != 1:
        x = x * m % n
        t += 1
    return t


def naive_valuation(ell, n):
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def naive_orbit(n, q, g):
    out, x = {g % n}, g * q % n
    while x not in out:
        out.add(x)
        x = x * q % n
    return frozenset(out)


def stable_sets(n, q):
    """Cosets of Z/nZ under multiplication by q, by brute orbit search."""
    seen, out = set(), []
    for g in range(n):
        if g not in seen:
            o = naive_orbit(n, q, g)
            seen |= o
            out.append(o)
    return out


def coprime(a, b):
    return math.gcd(a, b) == 1


def brute_med_partitions(elems, n):
    """Every partition of ``elems`` into progressions g + dZ/nZ sharing one d | n.

    Exact-cover backtracking over all progressions contained in the set;
    returns {d: [partition, ...]} with partitions as sorted tuples of classes.
    """
    members = set(elems)
    found = {}
    for d in range(1, n + 1):
        if n % d:
            continue
        blocks = []
        for r in range(d):
            cls = tuple(range(r, n, d))
            if members.issuperset(cls):
                blocks.append(cls)
        parts = []

        def cover(remaining, chosen):
            if not remaining:
                parts.append(tuple(sorted(chosen)))
                return
            g = min(remaining)
            for b in blocks:
                if g in b and remaining.issuperset(b):
                    cover(remaining - set(b), chosen + [b])

        if members:
            cover(frozenset(members), [])
        else:
            parts.append(())
        if parts:
            found[d] = parts
    return found


def translation_scan(elems, n):
    s = set(elems)
    return [a for a in range(n) if {(g + a) % n for g in s} == s]


# (criterion number, summary line) filled in by the acceptance tests
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
