"""Shared corpora and the per-criterion report of the acceptance suite."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import pytest

from cdindex.arrangement_euclid import AffineArrangement, intersection_lattice, unbounded_structures
from cdindex.arrangement_toric import ToricArrangement, intersection_poset, toric_face_poset_2d
from cdindex.corpus import random_affine_arrangement, random_toric_arrangement
from cdindex.fileformats import load
from cdindex.poset import GradedPoset, random_graded_poset

DATA = Path(__file__).resolve().parent.parent / "data"

N_POSETS = 220
N_AFFINE = 50
N_TORIC = 60


@dataclass
class AffineCase:
    seed: int
    A: AffineArrangement
    L: GradedPoset


@dataclass
class ToricCase:
    seed: int
    A: ToricArrangement
    P: GradedPoset
    sub: object


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def poset_corpus():
    return [random_graded_poset(s) for s in range(N_POSETS)]


@pytest.fixture(scope="session")
def affine_corpus():
    out = []
    for s in range(N_AFFINE):
        A = random_affine_arrangement(s)
        out.append(AffineCase(s, A, intersection_lattice(A)))
    return out


@pytest.fixture(scope="session")
def unbounded_cache():
    cache = {}

    def get(case: AffineCase):
        if case.seed not in cache:
            cache[case.seed] = unbounded_structures(case.A)
        return cache[case.seed]

    return get


@pytest.fixture(scope="session")
def toric_corpus():
    out = []
    for s in range(N_TORIC):
        A = random_toric_arrangement(s)
        out.append(ToricCase(s, A, intersection_poset(A), toric_face_poset_2d(A)))
    return out


@pytest.fixture(scope="session")
def example1():
    return load(DATA / "example1.toric")


@pytest.fixture(scope="session")
def example2():
    return load(DATA / "example2.toric")


@pytest.fixture(scope="session")
def cube():
    return load(DATA / "cube6.affine")


_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    # parametrized criteria pass only if every case passes
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" and outcome != "error":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                key = (int(m.group(1)), m.group(2).replace("_", " "))
                results[key] = results.get(key, True) and outcome == "passed"
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(results.items()):
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {name}")
