from pathlib import Path

import pytest

from ocmeaning.language import parse_collection, parse_statement
from ocmeaning.model import Oid

DATA = Path(__file__).parent / "data"

ACCEPTANCE_RESULTS: list[str] = []


def oid(text: str) -> Oid:
    return Oid.parse(text)


def stmt(line: str):
    s = parse_statement(line)
    assert not hasattr(s, "severity"), s
    return s


# the ten statements of the apricot example, keyed by their labels
EX = {
    "EX1": 'OID_01 | Analytic | has_NSC | "A mature ovary of a seed-bearing plant."@en',
    "EX2": "OID_01 | Analytic | has_NC | not OID_99",
    "EX3": 'OID_01 | Analytic | has_SC | "Apple"@en',
    "EX4": 'OID_02 | Analytic | has_NSC | "A fruit of the tree Prunus armeniaca."@en',
    "EX5": "OID_02 | Analytic | has_NC | OID_01",
    "EX6": 'OID_02 | Synthetic | has_NC | "Contains vitamin A."@en',
    "EX7": "OID_02 | Analytic | has_NC | OID_99 or not OID_99",
    "EX8": "OID_03 | Analytic | has_NC | OID_01",
    "EX9": 'OID_03 | Analytic | has_NC | "A tropical fruit."@en',
    "EX10": "OID_99 | Analytic | has_NC | not OID_10",
    "EX1*": 'OID_02 | Analytic | has_NC | "A mature ovary of a seed-bearing plant."@en',
    "EX2*": "OID_02 | Analytic | has_NC | not OID_99",
}


@pytest.fixture
def ex():
    return {k: stmt(v) for k, v in EX.items()}


@pytest.fixture
def apricot_text():
    return (DATA / "apricot.ocs").read_text()


@pytest.fixture
def apricot(apricot_text):
    collection, diags = parse_collection(apricot_text)
    assert diags == []
    return collection


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
