from .expansion import *
from .traversal import *
