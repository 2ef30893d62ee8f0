import os
from pydantic import BaseModel

class Settings(BaseModel):
    # Seed used by every randomized suite unless --seed is given
    ENGINE_SEED: int = int(os.getenv("ENGINE_SEED", "0"))

    # Randomized identity testing of the Hecke relations
    HECKE_TRIALS: int = int(os.getenv("HECKE_TRIALS", "25"))
    HECKE_DEGREE_BOUND: int = int(os.getenv("HECKE_DEGREE_BOUND", "2"))

    # Exact-arithmetic property checks
    FIELD_AXIOM_SAMPLES: int = int(os.getenv("FIELD_AXIOM_SAMPLES", "1000"))

    # Koornwinder suites: symbolic up to this N, random rational points above it
    KOORN_SYMBOLIC_MAX_N: int = int(os.getenv("KOORN_SYMBOLIC_MAX_N", "3"))
    KOORN_NUMERIC_POINTS: int = int(os.getenv("KOORN_NUMERIC_POINTS", "3"))

    # ASEP chain
    ASEP_TRIALS: int = int(os.getenv("ASEP_TRIALS", "3"))
    ASEP_MAX_N: int = int(os.getenv("ASEP_MAX_N", "6"))
    ASEP_MC_STEPS: int = int(os.getenv("ASEP_MC_STEPS", "1000000"))

    VERIFY_MAX_N: int = int(os.getenv("VERIFY_MAX_N", "3"))
    RST_CACHE_SIZE: int = int(os.getenv("RST_CACHE_SIZE", "4096"))

    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")


settings = Settings()
