"""Configuration via environment variables.

Every cap is a CENTRUM_* variable (e.g. CENTRUM_MAX_ORDER) or a .env entry.
"""

from __future__ import annotations

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # --- Carrier limits ---
    max_order: int = 4096
    ideal_enumeration_cap: int = 64
    oracle_max_order: int = 16

    # --- Polynomial checks ---
    degree_bound: int = 2
    search_budget: int = 100_000_000  # constraint-propagation steps
    nil_armendariz_max_order: int = 16
    poly_theorem_max_order: int = 16

    # --- Counterexample search ---
    search_max_depth: int = 2

    # --- Execution ---
    workers: int = 1
    log_level: str = "WARNING"

    model_config = {"env_prefix": "CENTRUM_", "env_file": ".env", "extra": "ignore"}
