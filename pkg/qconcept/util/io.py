"""Functions for reading and writing files."""
import json
import logging

import yaml

from qconcept.util.errors import ParseError

logger = logging.getLogger(__name__)


def load_json(file) -> object:
    """Loads a JSON file from a given filepath.

    Raises:
        ParseError: If the file isn't valid UTF-8 JSON.
    """

    with open(file, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed JSON in {file}: {e.msg} (line {e.lineno})")
        except UnicodeDecodeError as e:
            raise ParseError(f"{file} is not UTF-8 (byte {e.start})")


def load_yaml(file) -> dict:
    """Loads a YAML file from a given filepath (empty files give ``{}``).

    Raises:
        ParseError: If the file isn't valid UTF-8 YAML.
    """

    with open(file, "r", encoding="utf-8") as stream:
        try:
            return yaml.safe_load(stream) or {}
        except yaml.YAMLError as e:
            raise ParseError(f"malformed YAML in {file}: {e}")
        except UnicodeDecodeError as e:
            raise ParseError(f"{file} is not UTF-8 (byte {e.start})")


def write_text(text: str, file=None) -> None:
    """Writes text to a file, or prints it when ``file`` is ``None``."""

    if file is None:
        print(text)
        return
    with open(file, "w", encoding="utf-8") as f:
        f.write(text)
    logger.debug(f"{file}")


def dumps(obj: object) -> str:
    """Serializes an object to an indented JSON string (non-ASCII kept)."""

    return json.dumps(obj, indent=2, ensure_ascii=False)
