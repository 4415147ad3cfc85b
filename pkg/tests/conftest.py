import io
import json
from pathlib import Path

import pytest

from centerbench import fincat
from centerbench.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture(autouse=True)
def _default_limits():
    fincat.set_limits(None)
    yield
    fincat.set_limits(None)


def cli(*argv):
    """Run the CLI in-process; returns (exit code, parsed stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    text = out.getvalue()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError:
        payload = text
    return code, payload, err.getvalue()
