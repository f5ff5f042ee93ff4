import os
import sys

_path = os.environ.get("DIHEDRALSIG_PYPATH")
if _path:
    sys.path.insert(0, _path)
