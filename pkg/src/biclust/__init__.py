"""Pattern-mining biclustering of numerical expression matrices.

Five algorithms over a shared closed-pattern mining core:

- ``biarm``      generic association rules + Jaccard overlap filter
- ``bifca_plus`` formal concepts on adjacent-pair contexts + intent-overlap filter
- ``bifca``      formal concepts on all-pairs contexts + condition-count pre-filter
- ``nbic_arm``   sign-split rule mining for negatively correlated gene groups
- ``nbf``        sign-split concept mining with a stability pre-filter
"""

from .errors import (
    BiclustError,
    CapacityError,
    EmptyPatternError,
    IoError,
    MatrixMismatchError,
    NotClosedError,
    ParseError,
)
from .fca import BinaryContext, FormalConcept, enumerate_concepts, kernel_name

__version__ = "0.1.0"
