from .base import *
from .environment import *
