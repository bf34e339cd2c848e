import os
import sys

# ctest points this at the module built in the build tree; an editable
# install's import hook would otherwise shadow it.
_stage = os.environ.get("CONTINGENT_PY_STAGE")
if _stage:
    sys.meta_path[:] = [f for f in sys.meta_path if "ScikitBuild" not in type(f).__name__]
    sys.path.insert(0, _stage)
