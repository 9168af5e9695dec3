from environs import Env

env = Env()


class Config:
    """Single application configuration.

    Reads from environment variables; the log level default depends on
    ``ENVIRONMENT``. Command-line flags and ``--config`` files override the
    harness-related values per run (see ``src.modules.verify.schemas``).
    """

    ENVIRONMENT = env("ENVIRONMENT", "local")

    LOG_LEVEL = env(
        "LOG_LEVEL",
        {"local": "DEBUG", "ci": "INFO", "production": "WARNING"}.get(
            ENVIRONMENT, "INFO"
        ),
    )

    # Largest n for which B_{n,chi} is computed with exact rationals. Above it
    # the p-adic power-sum algorithm takes over (s = p^n(p-1) grows fast).
    EXACT_BERNOULLI_BOUND = env.int("EXACT_BERNOULLI_BOUND", 400)

    # How many levels k past the starting one the power-sum limit may try
    # before it is declared non-convergent, and the extra digits it carries.
    POWER_SUM_K_CEILING = env.int("POWER_SUM_K_CEILING", 12)
    POWER_SUM_GUARD_DIGITS = env.int("POWER_SUM_GUARD_DIGITS", 2)

    # Working precision = required valuation + PRECISION_SLACK. Never below 3.
    PRECISION_SLACK = max(3, env.int("PRECISION_SLACK", 3))

    # Identity checks (Fermat quotients, truncated logs) sample this many units
    # per prime from a seeded numpy Generator, so runs are reproducible.
    RANDOM_UNITS_PER_PRIME = env.int("RANDOM_UNITS_PER_PRIME", 50)
    RANDOM_SEED = env.int("RANDOM_SEED", 20240611)

    # >1 evaluates grid points in a process pool; report order is unaffected.
    MAX_WORKERS = env.int("MAX_WORKERS", 1)


config = Config()
