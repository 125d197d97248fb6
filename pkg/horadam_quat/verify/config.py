DEFAULT_P_RANGE = (-3, 3)
DEFAULT_Q_RANGE = (-3, 3)
DEFAULT_A_RANGE = (-2, 2)
DEFAULT_B_RANGE = (-2, 2)
DEFAULT_INDEX_RANGE = (-6, 12)

# cross-lucas-fib is cubic in the index count; its n, r, s stay inside this window by default
CROSS_INDEX_WINDOW = (-4, 8)

BENCH_SIZES = (1 << 10, 1 << 14, 1 << 18)
# timed runs per method and size; the best one is reported
BENCH_REPEATS = 1

OUTPUT_FORMATS = ('json', 'csv', 'human')

LOG_FILE_ENV = 'HORADAM_QUAT_LOG_FILE'
JOBS_ENV = 'HORADAM_QUAT_JOBS'
DEFAULT_LOG_FILE = 'horadam_quat.log'

# tasks handed to each worker per round trip
POOL_CHUNKSIZE = 8

# convention notes kept per identity for the human summary
NOTE_SAMPLE_SIZE = 5

# human verify output lists every report when the campaign is at most this large
HUMAN_REPORT_LIMIT = 50
