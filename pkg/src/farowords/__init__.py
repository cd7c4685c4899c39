"""Faro words, dispersed Dyck paths, and the bijections and generating functions linking them."""

from .bijections import (
    faro_to_path,
    foata,
    foata_inverse,
    path_to_faro,
    path_to_perm,
    perm_to_path,
)
from .errors import CapExceeded, DomainError, PatternSyntaxError, SeriesError
from .genfuncs import (
    expand_avoidance,
    expand_distribution,
    expand_named,
    expand_perm_distribution,
    expand_perm_popularity,
    expand_popularity_words,
)
from .oracle import enumeration_oracle
from .paths import enumerate_dispersed, enumerate_dispersed_with_peaks, is_dispersed_dyck
from .patterns import count_pattern, evaluate_statistic, parse_pattern, parse_statistic
from .report import Report
from .series import MultiSeries
from .words import (
    FaroWord,
    count_classical_pattern,
    count_consecutive_pattern,
    enumerate_faro_permutations,
    enumerate_faro_words,
    faro_word_count,
    is_faro_word,
)

__version__ = "0.1.0"
