import sys
from pathlib import Path

import pytest

from logicblocks.pricing.utils import write_atomically


class TestWriteAtomically:
    def test_writes_content(self, tmp_path: Path):
        path = tmp_path / "out.json"

        write_atomically(path, "content\n")

        assert path.read_text(encoding="utf-8") == "content\n"

    def test_replaces_existing_content(self, tmp_path: Path):
        path = tmp_path / "out.csv"
        path.write_text("old", encoding="utf-8")

        write_atomically(path, "new")

        assert path.read_text(encoding="utf-8") == "new"

    def test_creates_missing_directories(self, tmp_path: Path):
        path = tmp_path / "nested" / "deeper" / "out.txt"

        write_atomically(path, "x")

        assert path.read_text(encoding="utf-8") == "x"

    def test_leaves_no_temporary_files(self, tmp_path: Path):
        write_atomically(tmp_path / "out.txt", "x")

        assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
