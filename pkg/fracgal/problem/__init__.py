from .parameter import Parameter, ParamSpec, SwitchSpec
from .definition import Problem, make_problem
from .loader import parse_problem, load_problem, PARAM_SPECS, FORMAT_VERSION
