# utils/__init__.py
from utils.golden_store import load_golden, update_goldens
