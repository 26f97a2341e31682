import pathlib
import sys

# src layout: make the package importable without an install step
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent / "src"))
