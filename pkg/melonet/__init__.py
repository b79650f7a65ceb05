""" melonet

🎼 `melonet` converts symbolic music scores into weighted directed note-transition
networks and measures them with complex-network metrics.
"""

from typing import List

# Logo
LOGO: List[str] = [
    r"                 _                  _    ",
    r"  _ __ ___   ___| | ___  _ __   ___| |_  ",
    r" | '_ ` _ \ / _ \ |/ _ \| '_ \ / _ \ __| ",
    r" | | | | | |  __/ | (_) | | | |  __/ |_  ",
    r" |_| |_| |_|\___|_|\___/|_| |_|\___|\__| "
]
NAME: str = 'melonet'
DESCRIPTION: str = ''.join([
    '🎼 `melonet` converts symbolic music scores into weighted directed note-transition',
    ' networks and measures them with complex-network metrics.'
])

# Analysis configuration
SEED: int = 42  # The default seed for every randomized stage
ENSEMBLE_SIZE: int = 100  # The number of random graphs in the small-world ensemble
R2_THRESHOLD: float = 0.80  # The min. log-log r-squared for a scale-free degree distribution
RESOLUTION: float = 1.0  # The modularity resolution
BINS: int = 20  # The number of histogram bins for corpus distributions
TOP_NODES: int = 10  # The length of the ranked node lists in a metrics report
MAX_DURATION: int = 8  # The max. duration of a single event in whole notes
MODULARITY_THRESHOLD: float = 1e-9  # The min. modularity gain between aggregation levels

# Environment
SEED_VARIABLE: str = 'MELONET_SEED'
LOG_LEVEL_VARIABLE: str = 'MELONET_LOG_LEVEL'


# Errors
class errors:
    """ A `class` that represents static exit codes. """
    OK: int = 0
    INPUT_ERROR: int = 2
    CORPUS_EMPTY: int = 3
    INTERNAL_ERROR: int = 4


from melonet import (  # noqa: E402
    logging,
    exceptions,
    env,
    struct,
    ingest,
    network,
    metrics,
    smallworld,
    community,
    corpus,
    export,
    dal
)

__all__ = [
    'logging',
    'exceptions',
    'env',
    'struct',
    'ingest',
    'network',
    'metrics',
    'smallworld',
    'community',
    'corpus',
    'export',
    'dal'
]
