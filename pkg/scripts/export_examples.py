"""Write every catalog example as a CLI input file under worked_examples/."""

import argparse
from pathlib import Path

from homfund.catalog import worked_examples
from homfund.io import dumps_input


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "worked_examples")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for ex in worked_examples():
        path = args.out / f"{ex.name}.json"
        path.write_text(dumps_input(ex.input), encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()
