"""
Lab Configuration Module

Parameters shared by the randomized constructions and the combinatorial searches.
Library code receives a LabConfig explicitly; the CLI builds one from config.yml and
the CY2_* environment variables.
"""
from pydantic import BaseModel, ConfigDict, Field


class LabConfig(BaseModel):
    """Seeds, trial counts and search bounds"""
    model_config = ConfigDict(frozen=True)

    seed: int = Field(default=20240101, ge=0, description="Seed of every random draw")
    trials: int = Field(default=20, ge=0, description="Random trials of the cyclic-vector search")
    rational_bound: int = Field(default=10, ge=1, description="Numerators in [-N, N], denominators in [1, N]")
    surface_retries: int = Field(default=25, ge=1, description="Fresh draws before build_surface_simple gives up")
    commutator_trials: int = Field(default=25, ge=1, description="Random combinations tried for an invertible solution")
    quiver_retries: int = Field(default=25, ge=1, description="Fresh draws before build_quiver_simple gives up")
    max_witness_factors: int = Field(default=12, ge=2, description="Largest factor count tried by the witness search")
    max_subquiver_arrows: int = Field(default=16, ge=1, description="Induced arrow count above which subquivers are skipped")
    n_jobs: int = Field(default=1, description="joblib workers for batch evaluation")


DEFAULT_LAB_CONFIG = LabConfig()
