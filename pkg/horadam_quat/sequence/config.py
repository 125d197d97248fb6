FIBONACCI_SEEDS = (0, 1)

SEQUENCE_KINDS = ('pq-fib', 'pq-lucas')

# Memo size for term caches; the default verify grid needs a few tens of thousands of entries.
TERM_CACHE_SIZE = 1 << 17

# Memo size for per-(p, q) parameter objects and their derived constants.
PARAMS_CACHE_SIZE = 4096
