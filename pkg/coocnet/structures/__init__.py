from .documents import *
from .graph import *
from .params import *
from .typeoverloads import *
