import sys
from pathlib import Path

# Make both the package sources and a plain CMake build tree importable, so the
# smoke tests run against `cmake --build build` output without installation.
_repo = Path(__file__).resolve().parents[2]
for candidate in (_repo / "python", _repo / "build"):
    if candidate.is_dir():
        sys.path.insert(0, str(candidate))
