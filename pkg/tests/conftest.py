import pathlib

import pytest

from lexispec.corpus import attach_specificity, load_corpus
from lexispec.fixture import load_fixture
from lexispec.hierarchy import build_graph
from lexispec.wndb import load_wndb

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


@pytest.fixture(scope="session")
def mini_wndb_dir():
    return DATA / "mini_wndb"


@pytest.fixture(scope="session")
def wndb_db(mini_wndb_dir):
    return load_wndb(mini_wndb_dir)


@pytest.fixture(scope="session")
def mini_db():
    return load_fixture(DATA / "mini.wn")


@pytest.fixture(scope="session")
def mini_graph(mini_db):
    return build_graph(mini_db)


@pytest.fixture()
def sample_records(mini_db, mini_graph):
    records = load_corpus(DATA / "sample_corpus.tsv")
    return attach_specificity(records, mini_db, mini_graph)


def pytest_runtest_logreport(report):
    # one visible pass/fail line per acceptance criterion
    if "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        outcome = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        print(f"\n[acceptance] {name}: {outcome}", flush=True)
    elif report.when == "setup" and report.skipped:
        print(f"\n[acceptance] {name}: SKIP", flush=True)
