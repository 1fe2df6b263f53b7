from .depth import *
from .measure import *
from .report import *
from .runner import *
from .stats import *
