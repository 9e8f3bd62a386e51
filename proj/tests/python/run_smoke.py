"""ctest entry point: run the python smoke tests, or skip (exit 77) when the
extension module is not installed in the active interpreter."""

import importlib.util
import pathlib
import subprocess
import sys

if importlib.util.find_spec("dgal") is None:
    print("dgal not installed in this interpreter; skipping")
    sys.exit(77)

here = pathlib.Path(__file__).resolve().parent
sys.exit(subprocess.call([sys.executable, "-m", "pytest", "-q", str(here)]))
