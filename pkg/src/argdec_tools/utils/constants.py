# Backends
BACKEND_AUTO = "auto"  # Truth tables up to the bound, DPLL beyond
BACKEND_DPLL = "dpll"  # DPLL with unit propagation over Tseitin clauses
BACKEND_TRUTH_TABLE = "truth-table"  # Exhaustive bitset truth tables
BACKENDS = (BACKEND_AUTO, BACKEND_DPLL, BACKEND_TRUTH_TABLE)  # Accepted names

# Enumeration Bounds
TRUTH_TABLE_LIMIT = 16  # Max atoms handled by the truth-table backend
MODELS_LIMIT = 24  # Max atoms enumerated by models() and the semantic route
SUBSET_LIMIT = 16  # Max knowledge entries for argument enumeration
CONFLICT_LIMIT = 20  # Max formulas for minimal-conflict enumeration

# Generation
GENERATION_RETRIES = 200  # Rejection-sampling attempts before giving up
STATE_PREFIX = "p"  # Generated state atoms: p0, p1, ...
DECISION_PREFIX = "d"  # Generated decision atoms: d0, d1, ...
LEVEL_POOL = ("1/5", "2/5", "3/5", "4/5", "1")  # Default generated weights
