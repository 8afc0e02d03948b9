import pytest

import errors
from extract import parse_git_log
from tests.helpers.extract_helpers import THREE_COMMITS

pytestmark = pytest.mark.unit


def test_three_commit_fixture() -> None:
    commits = parse_git_log(THREE_COMMITS)
    assert [c.commit_id for c in commits] == ["aaaa1111", "bbbb2222", "cccc3333"]
    assert commits[0].timestamp == 1700000000
    assert commits[2].files == ("src/A.py", "src/C.py")


def test_empty_input() -> None:
    assert parse_git_log("") == []
    assert parse_git_log("\n\n") == []


def test_commit_without_files_is_dropped() -> None:
    commits = parse_git_log("aaaa1111\t1\n\nbbbb2222\t2\nx.py\n")
    assert [c.commit_id for c in commits] == ["bbbb2222"]


def test_files_are_deduplicated_in_order() -> None:
    commits = parse_git_log("aaaa1111\t1\nb.py\na.py\nb.py\n")
    assert commits[0].files == ("b.py", "a.py")


def test_crlf_line_endings() -> None:
    commits = parse_git_log(THREE_COMMITS.replace("\n", "\r\n"))
    assert len(commits) == 3
    assert commits[1].files == ("src/A.py", "src/B.py")


def test_file_before_header() -> None:
    with pytest.raises(errors.MalformedLog) as excinfo:
        parse_git_log("\nsrc/A.py\naaaa1111\t1\n")
    assert excinfo.value.line_number == 2


def test_duplicate_commit_id() -> None:
    with pytest.raises(errors.MalformedLog) as excinfo:
        parse_git_log("aaaa1111\t1\nx.py\naaaa1111\t2\ny.py\n")
    assert excinfo.value.line_number == 3
    assert "line 3" in str(excinfo.value)
