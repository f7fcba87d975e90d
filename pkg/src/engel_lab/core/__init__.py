from .words import (
    Block,
    Word,
    Z_WORD,
    block_key,
    block_of,
    enumerate_basis,
    is_normal,
    multidegree,
    set_partitions,
    word_sort_key,
    word_support,
    word_type,
)
from .elements import (
    LieElt,
    ad_c,
    ad_z,
    bracket,
    format_elt,
    gen,
    parse_word,
    straighten,
    zelt,
)

__all__ = [
    "Block",
    "Word",
    "Z_WORD",
    "block_key",
    "block_of",
    "enumerate_basis",
    "is_normal",
    "multidegree",
    "set_partitions",
    "word_sort_key",
    "word_support",
    "word_type",
    "LieElt",
    "ad_c",
    "ad_z",
    "bracket",
    "format_elt",
    "gen",
    "parse_word",
    "straighten",
    "zelt",
]
