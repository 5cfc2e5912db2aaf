from config.settings.base import *  # noqa: F403
from config.settings.base import LOGGING, env

DEBUG = True

LOG_LEVEL = env.str("LOG_LEVEL", default="DEBUG").upper()

LOGGING["root"]["level"] = LOG_LEVEL
LOGGING["loggers"]["engine"]["level"] = LOG_LEVEL
