"""
Settings for the operadcheck engine

The engine has no web surface and no persistence: Django provides the
settings layer, logging configuration and the management-command CLI.

For more information, see https://docs.djangoproject.com/en/5.0/ref/settings
"""

from pathlib import Path

from .environment import env

BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is signed or served; the key only satisfies Django's startup checks.
SECRET_KEY = env.str("SECRET_KEY", default="operadcheck-insecure-local-key")

DEBUG = env.bool("DJANGO_DEBUG", default=False)

ALLOWED_HOSTS: list[str] = []

INSTALLED_APPS = [
    # Third-party apps
    "rest_framework",
    # Local apps
    "core",
    "api",
]

# No database: every computation is in memory and reproducible from its
# parameters.
DATABASES: dict = {}

LANGUAGE_CODE = "en"

TIME_ZONE = "UTC"

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Reports go to standard output unless a directory is configured here or an
# explicit --output path is passed to a command.
REPORT_OUTPUT_DIR = env.str("OPERADCHECK_OUTPUT_DIR", default="")

# Seed shared by the randomized property suites (see conftest.py --seed)
DEFAULT_SEED = env.int("OPERADCHECK_SEED", default=20240611)

ENGINE_LIMITS = {
    # refuse to assemble a tree component whose tensor product exceeds
    # this many basis elements in total
    "MAX_COMPONENT_DIM": env.int("OPERADCHECK_MAX_COMPONENT_DIM", default=50000),
}

LOG_LEVEL = env.str("LOG_LEVEL", default="WARNING").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
        "engine_console": {
            "class": "logging.StreamHandler",
            "formatter": "standard",
        },
    },
    "formatters": {
        "verbose": {
            "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
        "standard": {
            "format": "[{asctime}] {levelname} [{name}:{lineno}] {message}",
            "style": "{",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": LOG_LEVEL,
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
        "engine": {
            "handlers": ["engine_console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
}
