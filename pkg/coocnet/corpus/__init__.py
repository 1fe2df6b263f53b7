from .synthetic import *
from .tokenizer import *
