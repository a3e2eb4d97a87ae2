"""Frozen reference values shared across test modules.

The two energy tables are transcribed from the published reference tables
for these sequences; None marks cells below the zero boundary (printed as
'*'). Row i's first real entry is the boundary zero at column i-1.
"""

TABLE_SEQ_1 = "GCGCCCCGC"
TABLE_1 = [
    [0, -2, -2, -4, -4, -4, -4, -6, -6],
    [0, 0, -2, -2, -2, -2, -2, -4, -4],
    [None, 0, 0, -2, -2, -2, -2, -4, -4],
    [None, None, 0, 0, 0, 0, 0, -2, -2],
    [None, None, None, 0, 0, 0, 0, -2, -2],
    [None, None, None, None, 0, 0, 0, -2, -2],
    [None, None, None, None, None, 0, 0, -2, -2],
    [None, None, None, None, None, None, 0, 0, -2],
    [None, None, None, None, None, None, None, 0, 0],
]

TABLE_SEQ_2 = "GAGGGTTTT"
TABLE_2 = [
    [0, 0, 0, 0, 0, -1, -1, -1, -1],
    [0, 0, 0, 0, 0, -1, -1, -1, -1],
    [None, 0, 0, 0, 0, 0, 0, 0, 0],
    [None, None, 0, 0, 0, 0, 0, 0, 0],
    [None, None, None, 0, 0, 0, 0, 0, 0],
    [None, None, None, None, 0, 0, 0, 0, 0],
    [None, None, None, None, None, 0, 0, 0, 0],
    [None, None, None, None, None, None, 0, 0, 0],
    [None, None, None, None, None, None, None, 0, 0],
]

# Reference m=3 example: generator and the quoted sample of codewords.
EXAMPLE_GENERATOR = "1110100"

# The quoted sample, verbatim. CACGGTC has GC-content 5 and therefore
# cannot occur in this constant-GC-4 code (its even binary component has
# weight 5, which no simplex codeword of dimension 3 has); the other seven
# words are constructible. TACGGTC, at Hamming distance 1 from it, is the
# nearest actual codeword.
EXAMPLE_WORDS_AS_PRINTED = [
    "TGGCTCA",
    "TCCGTGA",
    "CACGGTC",
    "TAGCCTG",
    "CATGGCT",
    "GATCCGT",
    "GGGAGAA",
    "GGAGAAG",
]
EXAMPLE_WORDS_CONSTRUCTIBLE = [w for w in EXAMPLE_WORDS_AS_PRINTED if w != "CACGGTC"]

MU1_ONE_WORDS = ["TGGCTCA", "TCCGTGA", "CACGGTC"]
MU1_TWO_WORDS = ["TAGCCTG", "CATGGCT", "GATCCGT"]
ALL_GA_LISTED = ["GGGAGAA", "GGAGAAG"]
