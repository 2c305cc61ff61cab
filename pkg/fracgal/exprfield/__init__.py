from .parser import (
    parse, evaluate, tokenize, Parser, Expr, Num, Var, Const, Neg, BinOp,
    Call, DEFAULT_VARIABLES)
from .field import CoefficientField, sup_bound
