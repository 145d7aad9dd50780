ELEMENT_CAP = 200000
DEGREE_BUDGET = 4096

AUTOMORPHISM_ORDER_BOUND = 12
COMPLEMENT_SEARCH_BOUND = 48
NORMALIZER_SEARCH_BOUND = 6

CORES = 1

LOG_FORMAT = '%(asctime)s %(levelname)s:%(message)s'
LOG_FILE = None
LOG_LEVEL = 'WARNING'
LOGGING_DISABLED = False
