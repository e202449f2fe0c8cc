#!/usr/bin/python3
"""
Regenerate every named fixture under fixtures/ and report which files changed.
"""

import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.documents import dumps  # noqa: E402
from src.errors import QgwError  # noqa: E402
from src.fixtures import FIXTURES, fixture_documents  # noqa: E402


def regenerate(name: str, out_dir: Path) -> int:
    """
    Write one fixture and count the files whose bytes changed.

    Args:
        name: Fixture name
        out_dir: Root fixtures directory; the fixture gets its own subdirectory
    """
    target = out_dir / name
    target.mkdir(parents=True, exist_ok=True)
    changed = 0
    for filename, document in fixture_documents(name).items():
        path = target / filename
        text = dumps(document)
        if path.exists() and path.read_text(encoding="utf-8") == text:
            continue
        path.write_text(text, encoding="utf-8")
        print(f"  updated {path}")
        changed += 1
    return changed


def main():
    """Main entry point."""
    print(
        """
==============================================
qgw - Regenerate fixtures
==============================================
"""
    )

    out_dir = Path(__file__).parent.parent / "fixtures"
    names = sys.argv[1:] or sorted(FIXTURES)

    total = 0
    try:
        for name in names:
            print(f"{name}:")
            total += regenerate(name, out_dir)
    except QgwError as err:
        print(f"Error: {err}")
        sys.exit(2)

    print(f"\nDone! {total} file(s) changed in {out_dir}")


if __name__ == "__main__":
    main()
