import sys
from pathlib import Path

# tests import the shared oracles module by plain name
sys.path.insert(0, str(Path(__file__).parent))
