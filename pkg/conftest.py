import sys
from pathlib import Path

# `libs`, `app` and `config_manager` import from the repository root
sys.path.insert(0, str(Path(__file__).parent))
