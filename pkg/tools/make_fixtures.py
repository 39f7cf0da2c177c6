"""Regenerate the committed fixture files under fixtures/.

Run from the repository root:

    python3 tools/make_fixtures.py
"""

import pathlib

from nchodge import BUILTIN_NAMES, builtin_atlas, save_atlas

HERE = pathlib.Path(__file__).resolve().parent.parent


def main() -> None:
    out = HERE / "fixtures"
    out.mkdir(exist_ok=True)
    for name in BUILTIN_NAMES:
        path = out / f"{name}.json"
        save_atlas(builtin_atlas(name), path)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
