# Criteria
MODE_PESSIMISTIC = "pessimistic"  # Pessimistic utility only
MODE_OPTIMISTIC = "optimistic"  # Optimistic utility only
MODE_BOTH = "both"  # Both criteria
MODES = (MODE_PESSIMISTIC, MODE_OPTIMISTIC, MODE_BOTH)  # Accepted --mode values

# Evaluation Routes
ROUTE_SEMANTIC = "semantic"  # Model enumeration
ROUTE_CUTS = "cuts"  # Level cuts and entailment
ROUTE_ARGS = "args"  # PRO / CON arguments
ROUTES = (ROUTE_SEMANTIC, ROUTE_CUTS, ROUTE_ARGS)  # Report order

# Exit Codes
EXIT_OK = 0  # Success
EXIT_INFEASIBLE = 4  # Every decision is inconsistent with K*

# Check Harness
REPLAY_DIR = "replay"  # Where offending instances are written
REPLAY_SUFFIX = ".pdl"  # Instance file extension

# Output Banners
DECISIONS_BANNER = "========== DECISIONS =========="  # Per-decision utilities
RANKING_BANNER = "========== RANKING =========="  # Ordered decision groups
EXPLAIN_BANNER = "========== EXPLANATION =========="  # Arguments for one decision
ACCEPT_BANNER = "========== ACCEPTABILITY =========="  # Argument classes
CHECK_BANNER = "========== DIFFERENTIAL CHECK =========="  # Check summary
NOTES_BANNER = "========== NOTES =========="  # Discrepancy and omission notes

# Output Headers
PIPELINE_HEADER = "Pipeline: "  # Selected pipeline
PRO_HEADER = "PRO: "  # Argument in favour
CON_HEADER = "CON: "  # Argument against
