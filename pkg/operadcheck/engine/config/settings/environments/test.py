from config.settings.base import *

TESTS = True

# keep test output quiet; scenario logs are asserted through caplog
LOGGING["root"]["level"] = "WARNING"
LOGGING["loggers"]["engine"]["level"] = "INFO"
LOGGING["loggers"]["engine"]["propagate"] = True

REPORT_OUTPUT_DIR = ""
