"""Closed forms versus the simulator, written to a text file.

    python3 scripts/discrepancy_report.py --out results/discrepancy_report.txt
"""
import argparse
from pathlib import Path

from spinnet.report import build_report, render_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/discrepancy_report.txt")
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    text = render_report(build_report(quick=args.quick))
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(text, encoding="utf-8")
    print(text.split("Summary\n-------\n")[1], end="")


if __name__ == "__main__":
    main()
