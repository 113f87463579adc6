"""UTF-8 text file access shared by every reader."""

from __future__ import annotations

from pathlib import Path

from ..exceptions import MissingFileError, ParseError


def read_text_file(path: str | Path, what: str = "File") -> str:
    """Read ``path`` as UTF-8.

    Args:
        path: File to read
        what: Noun used in the not-found message, e.g. ``"Drawer file"``

    Raises:
        MissingFileError: If ``path`` is not an existing file
        ParseError: If the content is not valid UTF-8
    """
    file = Path(path)
    if not file.is_file():
        raise MissingFileError(f"{what} not found: {file}")
    try:
        return file.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"invalid UTF-8 byte at offset {e.start}", expected="UTF-8 text", source=str(file)) from e
