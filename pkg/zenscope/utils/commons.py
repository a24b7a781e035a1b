"""
Module for common terms definition.
"""

# Zenscope version
ZENSCOPE_VERSION: str = "0.1.0"

# Dependence measures
MEASURE_TAU: str = "tau"
MEASURE_RHO_S: str = "rho_s"
MEASURE_LAMBDA_T: str = "lambda_t"
MEASURE_LAMBDA_EMP: str = "lambda_emp"
MEASURE_LAMBDA_JOINT: str = "lambda_joint"
MEASURE_LAMBDA_DIFF: str = "lambda_diff"
MEASURE_GOF_MIN_P: str = "gof_min_p"
PAIRWISE_MEASURES: tuple = (MEASURE_TAU, MEASURE_RHO_S, MEASURE_LAMBDA_T, MEASURE_LAMBDA_EMP)
# Auxiliary per-pair quantities stored with the lambda_t matrix
LAMBDA_T_AUX: tuple = ("rho", "nu", "tau", "loglik", "nu_at_bound")

# CLI spelling of the measures
CLI_MEASURES: dict = {
    "tau": MEASURE_TAU,
    "rho": MEASURE_RHO_S,
    "lambda-t": MEASURE_LAMBDA_T,
    "lambda-emp": MEASURE_LAMBDA_EMP,
}

# Numerical constants
PROB_EPS: float = 1e-16
NU_LOWER: float = 1.0
NU_UPPER: float = 300.0
EIGEN_FLOOR: float = 1e-8

# Missing markers accepted in price files
MISSING_MARKERS: tuple = ("", "NA")

# Output layout
ARTIFACTS_DIR: str = "artifacts"
METADATA_DIR: str = "metadata"
RUN_METADATA: str = "run_metadata.json"

# Zenpath sources besides the dependence measures
SOURCE_NU: str = "nu"
SOURCE_GOF: str = "gof"
ZENPATH_SOURCES: tuple = PAIRWISE_MEASURES + (MEASURE_LAMBDA_JOINT, MEASURE_LAMBDA_DIFF, SOURCE_NU, SOURCE_GOF)
CLI_SOURCES: dict = {
    **CLI_MEASURES,
    "lambda-joint": MEASURE_LAMBDA_JOINT,
    "lambda-diff": MEASURE_LAMBDA_DIFF,
    "nu": SOURCE_NU,
    "gof": SOURCE_GOF,
}

# Artifact filenames
PRICES_FILE: str = "prices.csv"
SECTORS_FILE: str = "sectors.csv"
INGEST_FILE: str = "ingest.json"
PRICES_CLEAN_FILE: str = "prices_clean.csv"
RETURNS_FILE: str = "returns.csv"
MARGINS_FILE: str = "margins.json"
RESIDUALS_FILE: str = "residuals.csv"
POBS_FILE: str = "pobs.csv"
DIAGNOSTICS_FILE: str = "diagnostics.json"
JOINT_FILE: str = "joint.json"
GOF_FILE: str = "gof.json"
ZENPATH_FILE: str = "zenpath.json"
ZENPLOT_FILE: str = "zenplot.svg"
