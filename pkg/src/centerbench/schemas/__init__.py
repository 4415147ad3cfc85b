"""JSON schemas for the file formats and for every CLI report."""

import json
from importlib import resources

COMMAND_SCHEMAS = {
    "validate": "validate",
    "center": "construction",
    "weak-center": "construction",
    "centralizer": "construction",
    "colimit": "colimit",
    "comonoids": "comonoids",
    "cofree": "cofree",
    "generators": "generators",
    "quotients": "quotients",
    "braid nf": "braid-nf",
    "braid equal": "braid-equal",
    "braid braiding": "braid-braiding",
    "braid theorems": "braid-theorems",
    "braid export": "braid-export",
}


def load_schema(name: str) -> dict:
    text = resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def schema_for_report(report: dict) -> dict:
    if "error" in report:
        return load_schema("error")
    return load_schema(COMMAND_SCHEMAS[report["command"]])
