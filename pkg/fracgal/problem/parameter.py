from builtins import object
from fracgal.exceptions import (
    FracGalUsageError, FracGalInvalidParameterError)
from fracgal.utils import parse_value


class Parameter(object):
    """
    Represents a parameter read from a problem file or overridden on the
    command line

    Parameters
    ----------
    name : str
        Name of the parameter
    value : float | int | str | list | tuple
        Value of the parameter
    """

    def __init__(self, name, value):
        self._name = name
        if value is None:
            self._dtype = None
        else:
            if not isinstance(value, (int, float, str, tuple, list)):
                raise FracGalUsageError(
                    "Invalid type for '{}' parameter ({}), {}, can be one of "
                    "int, float, str or a list of them"
                    .format(name, value, type(value)))
            self._dtype = (str if isinstance(value, str) else type(value))
        self._value = value

    @property
    def name(self):
        return self._name

    @property
    def value(self):
        return self._value

    @property
    def dtype(self):
        if self._dtype is None:
            return type(None)
        return self._dtype

    def __eq__(self, other):
        try:
            return self.name == other.name and self.value == other.value
        except AttributeError:
            return False

    def __repr__(self):
        return "Parameter(name='{}', value={})".format(self.name,
                                                       self.value)


class ParamSpec(Parameter):
    """
    Specifies a key of a problem file section

    Parameters
    ----------
    name : str
        Name of the parameter
    default : float | int | str | list | None
        Default value of the parameter, None if the key is required
    desc : str
        A description of the parameter
    choices : list | None
        Restrict valid inputs to the following choices
    dtype : type | None
        The datatype of the parameter. If none will be determined from
        default value
    array : bool
        Whether the parameter is a list of values of dtype
    """

    def __init__(self, name, default, desc=None, choices=None, dtype=None,
                 array=False):
        super(ParamSpec, self).__init__(name, default)
        self._desc = desc
        self._array = array
        self._choices = tuple(choices) if choices is not None else None
        if dtype is not None:
            if self.default is not None and (
                not array and not isinstance(self.default, dtype) or
                array and any(not isinstance(d, dtype)
                              for d in self.default)):
                raise FracGalUsageError(
                    "Provided default value ({}) does not match explicit "
                    "dtype ({})".format(self.default, dtype))
            self._dtype = dtype
        elif array and default:
            self._dtype = type(default[0])

    @property
    def default(self):
        return self._value

    @property
    def required(self):
        return self._value is None

    @property
    def array(self):
        return self._array

    @property
    def desc(self):
        return self._desc

    @property
    def choices(self):
        return self._choices

    def __repr__(self):
        return "ParamSpec(name='{}', default={}, desc='{}')".format(
            self.name, self.default, self.desc)

    def parse(self, text, context=None):
        """
        Converts the text of a problem-file value into a Parameter and
        checks it is valid
        """
        dtype = self.dtype if self.dtype is not type(None) else None
        try:
            value = parse_value(text, dtype=dtype)
        except FracGalUsageError as e:
            raise FracGalInvalidParameterError(
                "Could not parse '{}' parameter{}: {}".format(
                    self.name, self._context_str(context), e.msg))
        if self.array and not isinstance(value, list):
            value = [value]
        parameter = Parameter(self.name, value)
        self.check_valid(parameter, context=context)
        return parameter

    @staticmethod
    def _context_str(context):
        return ' in ' + context if context is not None else ''

    def check_valid(self, parameter, context=None):
        context_str = self._context_str(context)
        if parameter.value is not None:
            if self.array:
                if not isinstance(parameter.value, (list, tuple)):
                    raise FracGalInvalidParameterError(
                        "Expected a list of values for '{}' parameter{} ({} "
                        "provided)".format(parameter.name, context_str,
                                           parameter.value))
                errors = []
                for value in parameter.value:
                    try:
                        self._check_valid_value(value, parameter.name,
                                                context_str)
                    except FracGalInvalidParameterError as e:
                        errors.append(e)
                if errors:
                    raise FracGalInvalidParameterError(
                        '\n'.join(e.msg for e in errors))
            else:
                self._check_valid_value(parameter.value, parameter.name,
                                        context_str)

    def _check_valid_value(self, value, param_name, context_str):
        if value != self.default:
            if not isinstance(value, self.dtype):
                raise FracGalInvalidParameterError(
                    "Incorrect datatype for '{}' parameter provided ({}){}. "
                    "Should be {}"
                    .format(param_name, type(value), context_str, self.dtype))
            if self.choices is not None and value not in self.choices:
                raise FracGalInvalidParameterError(
                    "Invalid value for '{}' parameter provided ({}){}. Can be "
                    "one of '{}'".format(param_name, value, context_str,
                                         "', '".join(str(c)
                                                     for c in self.choices)))


class SwitchSpec(ParamSpec):
    """
    Specifies a parameter that switches between comparable methods (e.g.
    the L1 or Picard solver)

    Parameters
    ----------
    name : str
        Name of the parameter
    default : str
        Default option for the switch
    choices : list[str]
        The valid values for the switch
    desc : str
        A description of the parameter
    """

    def __init__(self, name, default, choices=None, desc=None):
        if choices is None:
            raise FracGalUsageError(
                "Choices must be provided for switches ('{}')".format(name))
        super(SwitchSpec, self).__init__(name, default, desc=desc,
                                         choices=choices, dtype=str)

    def check_valid(self, switch, context=None):
        if switch.value not in self.choices:
            raise FracGalInvalidParameterError(
                "Value provided to switch '{}'{} ({}) is not a valid "
                "choice ('{}')".format(
                    self.name, self._context_str(context), switch.value,
                    "', '".join(str(c) for c in self.choices)))

    def __repr__(self):
        return ("SwitchSpec(name='{}', default={}, choices={}, "
                "desc='{}')".format(self.name, self.default,
                                    self.choices, self.desc))
