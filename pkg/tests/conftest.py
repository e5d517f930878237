import os

import pytest

from hopfint.algebra import (
    cyclic_group_algebra,
    group_algebra,
    product_hopf,
    symmetric_group_s3,
)
from hopfint.rings import parse_ring

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def hopf_corpus():
    """Named Hopf algebras over rings where integrals can be solved for."""
    s3_table, s3_labels = symmetric_group_s3()
    Q = parse_ring("Q")
    return {
        "Q[C2]": cyclic_group_algebra(Q, 2),
        "Q[C3]": cyclic_group_algebra(Q, 3),
        "Q[S3]": group_algebra(Q, s3_table, s3_labels),
        "GF(2)[C2]": cyclic_group_algebra(parse_ring("GF(2)"), 2),
        "GF(3)[C3]": cyclic_group_algebra(parse_ring("GF(3)"), 3),
        "GF(5)[C2]": cyclic_group_algebra(parse_ring("GF(5)"), 2),
        "Z/4[C2]": cyclic_group_algebra(parse_ring("Z/4"), 2),
        "Z/6[C3]": cyclic_group_algebra(parse_ring("Z/6"), 3),
        "Z/12[C2]": cyclic_group_algebra(parse_ring("Z/12"), 2),
        "Z[C2]": cyclic_group_algebra(parse_ring("Z"), 2),
        "(Q x Q)[C2]": cyclic_group_algebra(parse_ring("Q x Q"), 2),
        "Q[C1] x Q[C2]": product_hopf(cyclic_group_algebra(Q, 1), cyclic_group_algebra(Q, 2)),
        "GF(2)[C2] x GF(3)[C2]": product_hopf(cyclic_group_algebra(parse_ring("GF(2)"), 2),
                                              cyclic_group_algebra(parse_ring("GF(3)"), 2)),
    }


@pytest.fixture(scope="session")
def corpus():
    return hopf_corpus()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
