"""
Configuration Management

Process-wide settings come from the environment (and an optional .env file).
Per-invocation settings are validated by RunConfig.
"""
import os
from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


class Config:
    """Configuration class for the application"""

    # Path configurations
    BASE_DIR = Path(__file__).parent.parent
    DATA_DIR = Path(os.getenv("MODFORMS_DATA_DIR", str(BASE_DIR / "data")))
    CACHE_DIR = Path(os.getenv("MODFORMS_CACHE_DIR", str(DATA_DIR / "spaces")))
    LOG_DIR = Path(os.getenv("MODFORMS_LOG_DIR", str(BASE_DIR / "logs")))
    LOG_FILE = LOG_DIR / "modforms.log"
    LOG_LEVEL = os.getenv("MODFORMS_LOG_LEVEL", "INFO")

    # Exact arithmetic (all precisions in twice-exponent units)
    PRECISION_CAP = int(os.getenv("MODFORMS_PRECISION_CAP", "20000"))
    PRECISION_FLOOR = 64
    STURM_MARGIN = 20
    OPERATOR_PRECISION_FACTOR = 5
    SEPARATION_ATTEMPTS = 10

    # Numerics
    DEFAULT_TERMS = int(os.getenv("MODFORMS_TERMS", "400"))
    ANCHOR_TERMS = int(os.getenv("MODFORMS_ANCHOR_TERMS", "16000"))
    DEFAULT_TOLERANCE = float(os.getenv("MODFORMS_TOLERANCE", "1e-8"))
    CONTROL_THRESHOLD = 1e-2
    LFUNCTION_CONTROL_THRESHOLD = 1e-3
    RESIDUAL_FLOOR_FACTOR = 1e-3
    DEFAULT_SEED = int(os.getenv("MODFORMS_SEED", "20240611"))
    MP_DPS = int(os.getenv("MODFORMS_MP_DPS", "30"))

    # Execution
    MAX_WORKERS = int(os.getenv("MODFORMS_MAX_WORKERS", "4"))
    CACHE_FORMAT_VERSION = "v1"

    @classmethod
    def ensure_dirs(cls):
        """Ensure all required directories exist"""
        for dir_path in [
            cls.DATA_DIR,
            cls.CACHE_DIR,
            cls.LOG_DIR,
        ]:
            dir_path.mkdir(parents=True, exist_ok=True)


Config.ensure_dirs()


class RunConfig(BaseModel):
    """Settings for a single command-line invocation"""

    precision: Optional[int] = Field(default=None, gt=0)
    terms: Optional[int] = Field(default=None, gt=0)
    tolerance: float = Field(default=Config.DEFAULT_TOLERANCE, gt=0)
    cache_dir: Path = Config.CACHE_DIR
    use_cache: bool = True
    seed: int = Config.DEFAULT_SEED
    output_format: Literal["json", "text"] = "json"
    strict: bool = False
