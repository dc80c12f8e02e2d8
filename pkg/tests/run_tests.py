#!/usr/bin/env python3
"""Run the staraut test suite through pytest."""
import argparse
import subprocess
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parent.parent

# Exhaustive enumerations and the seeded Chu sweep
SLOW_TESTS = ["test_ribbon.py", "test_prof.py", "test_chu.py"]

COVERED_PACKAGES = ["core", "algebra", "commands", "util"]


def pytest_command(targets, verbose=False, coverage=False, fast=False):
    cmd = [sys.executable, "-m", "pytest", "-v" if verbose else "-q", "--tb=short"]
    if coverage:
        cmd += [f"--cov={package}" for package in COVERED_PACKAGES]
        cmd.append("--cov-report=term-missing")
    if targets:
        cmd += [f"tests/{target}" for target in targets]
    else:
        cmd.append("tests/")
        if fast:
            cmd += [f"--ignore=tests/{name}" for name in SLOW_TESTS]
    return cmd


def main(argv=None):
    parser = argparse.ArgumentParser(description="Run staraut tests")
    parser.add_argument("targets", nargs="*", help="Test files under tests/, e.g. test_qforms.py")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("-c", "--coverage", action="store_true", help="Report line coverage")
    parser.add_argument("-f", "--fast", action="store_true", help=f"Skip {', '.join(SLOW_TESTS)}")
    args = parser.parse_args(argv)

    cmd = pytest_command(args.targets, args.verbose, args.coverage, args.fast)
    print(" ".join(cmd), file=sys.stderr)
    return subprocess.run(cmd, cwd=PROJECT_ROOT, check=False).returncode


if __name__ == "__main__":
    sys.exit(main())
