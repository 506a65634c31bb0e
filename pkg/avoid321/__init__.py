"""avoid321 - statistics, generating functions and bijections on 321-avoiding permutations."""

import importlib.metadata

try:
    __version__ = importlib.metadata.version("avoid321")
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0"

__license__ = "MIT"
