import sys
from pathlib import Path

import pytest

from natpref import synth
from natpref.frontend import parse_file

sys.path.insert(0, str(Path(__file__).parent))


def method_source(body, params="", name="run", extra=""):
    """A one-method class around ``body``."""
    return (
        "package demo;\n\n"
        "public class Demo {\n"
        f"{extra}"
        f"    int {name}({params}) {{\n"
        + "".join(f"        {line}\n" for line in body.strip("\n").split("\n"))
        + "        return 0;\n"
        "    }\n"
        "}\n"
    )


def parsed_method(body, params="", **kw):
    src = method_source(body, params, **kw)
    return parse_file(src, "Demo.java")


@pytest.fixture(scope="session")
def synth_corpus(tmp_path_factory):
    """Small multi-project synthetic corpus shared by several modules."""
    root = tmp_path_factory.mktemp("synth")
    paths = synth.write_corpus(root, n_projects=4, files_per_project=5, seed=3)
    return root, sorted(paths)


@pytest.fixture(scope="session")
def synth_parsed(synth_corpus):
    _, paths = synth_corpus
    return [parse_file(p.read_text(), str(p)) for p in paths]


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or rep.when not in ("call", "setup"):
                continue
            if outcome == "passed" and rep.when != "call":
                continue
            n = int(nodeid.split("test_criterion_")[1].split("_")[0])
            detail = dict(rep.user_properties).get("criterion", f"{n}: {nodeid.split('::')[1]}")
            lines.append((n, f"{'PASS' if outcome == 'passed' else 'FAIL'} criterion {detail}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
