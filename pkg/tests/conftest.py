from hypothesis import strategies as st

from pathlat.path import Path, parse_path


def paths(min_n=0, max_n=14):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.integers(0, (1 << n) - 1).map(lambda b: Path(b, n)))


def path_pairs(min_n=0, max_n=14):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1)).map(
            lambda t: (Path(t[0], n), Path(t[1], n))))


def p(text):
    return parse_path(text)


def all_paths(n):
    return [Path(b, n) for b in range(1 << n)]
