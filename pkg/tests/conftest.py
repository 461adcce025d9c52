import time
from contextlib import contextmanager

import pytest

RESULTS: list[str] = []


def clear_caches():
    from schurpos import immanants, schur, temperley_lieb

    schur._SKEW_CACHE.clear()
    schur._straight_product.cache_clear()
    schur._shape_product.cache_clear()
    temperley_lieb.compose.cache_clear()
    temperley_lieb._theta_cached.cache_clear()
    immanants.f_table.cache_clear()


@contextmanager
def _criterion(number, title: str, limit: float | None):
    clear_caches()
    start = time.perf_counter()
    line = None
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed > limit:
            line = f"FAIL  [{number}] {title}: {elapsed:.1f}s exceeds the {limit:g}s limit"
            raise AssertionError(line)
        line = f"PASS  [{number}] {title} ({elapsed:.1f}s)"
    except BaseException as exc:
        if line is None:
            line = f"FAIL  [{number}] {title}: {type(exc).__name__}: {exc}".splitlines()[0]
        raise
    finally:
        RESULTS.append(line)
        print(line)


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
