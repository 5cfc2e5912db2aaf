# This file is part of the package versioning
#
# Contains the version of the package that is reported in the header of every
# verification report.
VERSION = "0.3.0"
