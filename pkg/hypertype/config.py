"""
Environment configuration and logging setup.

Values come from the process environment, optionally populated from a .env
file (see env_template.txt). Command line flags override them through
Settings.replace().
"""
import logging
import os
from dataclasses import dataclass, replace as dataclass_replace
from functools import lru_cache
from logging.handlers import RotatingFileHandler

from dotenv import load_dotenv

from .errors import ConfigError

load_dotenv()

LOG_FORMAT = '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'


def _env(name, default, cast):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return cast(raw)
    except ValueError as e:
        raise ConfigError(f"Environment variable {name}={raw!r} is not a valid {cast.__name__}") from e


@dataclass(frozen=True)
class Settings:
    max_terms: int = 10000
    tol: float = 1e-12
    quad_limit: int = 200
    ray_cutoff: float = 60.0
    seed: int = 0
    log_level: str = 'INFO'
    log_file: str = 'logs/hypertype.log'

    def replace(self, **changes):
        """Return a copy with the non-None entries of `changes` applied."""
        changes = {k: v for k, v in changes.items() if v is not None}
        return dataclass_replace(self, **changes)


def load_settings():
    """Read a fresh Settings from the environment."""
    settings = Settings(
        max_terms=_env('HYPERTYPE_MAX_TERMS', 10000, int),
        tol=_env('HYPERTYPE_TOL', 1e-12, float),
        quad_limit=_env('HYPERTYPE_QUAD_LIMIT', 200, int),
        ray_cutoff=_env('HYPERTYPE_RAY_CUTOFF', 60.0, float),
        seed=_env('HYPERTYPE_SEED', 0, int),
        log_level=os.environ.get('LOG_LEVEL', 'INFO').upper(),
        log_file=os.environ.get('LOG_FILE', 'logs/hypertype.log'),
    )
    if settings.max_terms <= 0:
        raise ConfigError("HYPERTYPE_MAX_TERMS must be positive")
    if settings.tol <= 0:
        raise ConfigError("HYPERTYPE_TOL must be positive")
    return settings


_active = None


@lru_cache(maxsize=1)
def _environment_settings():
    return load_settings()


def get_settings():
    """The settings in force: those installed by use_settings(), else the environment's."""
    return _active if _active is not None else _environment_settings()


def use_settings(settings):
    """
    Install `settings` for every later get_settings() call; None restores the
    environment. Returns the settings that were installed before.
    """
    global _active
    previous, _active = _active, settings
    return previous


def configure_logging(settings=None, to_file=False):
    """
    Attach handlers to the package logger.

    Args:
        settings (Settings): source of LOG_LEVEL and LOG_FILE (default: environment)
        to_file (bool): also write to a rotating log file

    Returns:
        logging.Logger: the configured 'hypertype' logger
    """
    settings = settings or get_settings()
    logger = logging.getLogger('hypertype')
    level = getattr(logging, settings.log_level, logging.INFO)
    logger.setLevel(level)

    if not any(isinstance(h, logging.StreamHandler) and not isinstance(h, RotatingFileHandler)
               for h in logger.handlers):
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(stream_handler)

    if to_file and not any(isinstance(h, RotatingFileHandler) for h in logger.handlers):
        log_dir = os.path.dirname(settings.log_file)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir, mode=0o755)
        file_handler = RotatingFileHandler(settings.log_file, maxBytes=10 * 1024 * 1024, backupCount=10)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        file_handler.setLevel(level)
        logger.addHandler(file_handler)

    for handler in logger.handlers:
        handler.setLevel(level)
    return logger
