"""Shared oracles.

Everything here is written against plain numpy and Python integers and does
not import the package, so it can check the package independently.
"""

import numpy as np
import pytest


def squares_mod(p):
    return {(y * y) % p for y in range(1, p)}


def residue_conference(p):
    """C[i, j] = chi(j - i) over the integers mod a prime p."""
    sq = squares_mod(p)

    def chi(x):
        x %= p
        return 0 if x == 0 else (1 if x in sq else -1)

    return np.array([[chi(j - i) for j in range(p)] for i in range(p)], dtype=np.int64)


def residue_paley(p):
    """Bordered I + S of order p + 1 for a prime p = 3 (mod 4)."""
    c = residue_conference(p)
    n = p + 1
    s = np.zeros((n, n), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = c
    return s + np.eye(n, dtype=np.int64)


def atom_oracle(c, name):
    q = c.shape[0]
    i, j = np.eye(q, dtype=np.int64), np.ones((q, q), dtype=np.int64)
    sign = -1 if name.startswith("-") else 1
    base = name.lstrip("+-")
    m = {"J": j, "P": j - 2 * i, "Q": c + i, "Qt": (c + i).T}[base]
    return sign * m


def grid_oracle(c, cells):
    a = [atom_oracle(c, x) for x in cells]
    return np.block([[a[0], a[1]], [a[2], a[3]]])


def hprime_oracle(q, s, n_cells, m_cells=("+Q", "+Q", "+Q", "-Q")):
    """Dense H' and the verdict of H' H'^T == nI, using the residue seeds (prime q, s).

    ``m_cells="B"`` selects the symmetric-C block [[C+I, -C+I], [-C+I, -C-I]].
    """
    c = residue_conference(q)
    if m_cells == "B":
        i = np.eye(q, dtype=np.int64)
        m = np.block([[c + i, -c + i], [-c + i, -c - i]])
    else:
        m = grid_oracle(c, m_cells)
    n_mat = grid_oracle(c, n_cells)
    h = residue_paley(s)
    smat = h - np.eye(s + 1, dtype=np.int64)
    hp = np.kron(smat, m) + np.kron(np.eye(s + 1, dtype=np.int64), n_mat)
    order = hp.shape[0]
    return hp, bool(np.array_equal(hp @ hp.T, order * np.eye(order, dtype=np.int64)))


def naive_first_bad_pair(arr):
    n = arr.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            d = int(sum(int(arr[i, k]) * int(arr[j, k]) for k in range(n)))
            if d != 0:
                return i, j, d
    return None


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


# -- acceptance summary ---------------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        n, title = marker.args
        prev = _CRITERIA.get(n, (title, True))
        _CRITERIA[n] = (title, prev[1] and report.passed)
    elif marker is not None and report.when == "setup" and report.failed:
        n, title = marker.args
        _CRITERIA[n] = (title, False)
    return report


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
