from .invertedindex import *
from .snapshot import *
