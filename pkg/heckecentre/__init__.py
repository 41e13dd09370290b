# -*- coding: utf-8 -*-

from .poly import *
from .combinat import *
from .permutations import *
from .hecke import *
from .qsym import *
from .matrix import *
from .tower import *
from .centre import *


L = jm # L(i, n) is the Jucys-Murphy element L_i of H_n
m = eval_m
p = eval_p
