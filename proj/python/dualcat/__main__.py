"""Forward `python -m dualcat ...` to the bundled CLI binary."""

import os
import subprocess
import sys


def main():
    exe = os.path.join(os.path.dirname(__file__), "bin", "dualcat")
    if not os.path.exists(exe):
        exe = os.environ.get("DUALCAT_CLI", "")
        if not exe or not os.path.exists(exe):
            sys.stderr.write("dualcat CLI binary not found (set DUALCAT_CLI)\n")
            return 2
    return subprocess.call([exe, *sys.argv[1:]])


if __name__ == "__main__":
    raise SystemExit(main())
