"""Byte-for-byte regression on a frozen set of CLI invocations.

Each line of golden/commands.txt is a full ``pbn`` argument list; the
expected stdout lives in golden/expected/NN.out.  Any formatting or
numerical drift shows up as a byte diff.
"""

import io
import shlex
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from prymbn import cli

GOLDEN = Path(__file__).parent / "golden"
COMMANDS = GOLDEN.joinpath("commands.txt").read_text().splitlines()


def test_command_list_is_complete():
    assert len(COMMANDS) == 20
    assert len(list(GOLDEN.joinpath("expected").glob("*.out"))) == 20


@pytest.mark.parametrize("index,line", list(enumerate(COMMANDS, 1)))
def test_golden_output(index, line):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(shlex.split(line))
    assert code == 0
    expected = GOLDEN.joinpath("expected", f"{index:02d}.out").read_text()
    assert buf.getvalue() == expected
