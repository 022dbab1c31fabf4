"""Environment-backed settings and the one place logging gets configured."""
import logging
import os
from dataclasses import dataclass

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    bench_workers: int = 1
    seed: int = 7
    data_dir: str = "db"

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        defaults = cls()
        return cls(
            log_level=environ.get("SYNERGY_LOG_LEVEL", defaults.log_level).upper(),
            bench_workers=int(environ.get("SYNERGY_BENCH_WORKERS", defaults.bench_workers)),
            seed=int(environ.get("SYNERGY_SEED", defaults.seed)),
            data_dir=environ.get("SYNERGY_DATA_DIR", defaults.data_dir),
        )


def configure_logging(level="WARNING"):
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, force=True)
