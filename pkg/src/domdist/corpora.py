"""Access to the bundled fixture corpora: all connected graphs with n <= 5.

Larger corpora (standard small-graph enumeration output, one graph6 line per
graph) are supplied externally; see the README.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

BUNDLED_ORDERS = (2, 3, 4, 5)


def bundled_corpus_path(n: int) -> Path:
    """Filesystem path of the bundled corpus of connected graphs of order n."""
    if n not in BUNDLED_ORDERS:
        raise ValueError(f"bundled corpora cover n in {BUNDLED_ORDERS}, got {n}")
    resource = resources.files("domdist").joinpath(f"data/connected_n{n}.g6")
    return Path(str(resource))
