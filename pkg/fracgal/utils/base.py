from fracgal.exceptions import FracGalUsageError

JSON_ENCODING = {'encoding': 'utf-8'}


def parse_single_value(value, dtype=None):
    """
    Tries to convert to int, float and then gives up and assumes the value
    is of type string. Useful when excepting values that may be string
    representations of numerical values
    """
    if isinstance(value, str):
        value = value.strip()
        if value.startswith('"') and value.endswith('"'):
            value = str(value[1:-1])
        else:
            for converter in (int, float):
                try:
                    value = converter(value)
                    break
                except ValueError:
                    pass
    elif not isinstance(value, (int, float, bool)):
        raise FracGalUsageError(
            "Unrecognised type for single value {}".format(value))
    if dtype is not None:
        if (dtype is int and isinstance(value, float)
                and not value.is_integer()):
            raise FracGalUsageError(
                "Could not convert '{}' to int without truncation".format(
                    value))
        try:
            value = dtype(value)
        except (TypeError, ValueError):
            raise FracGalUsageError(
                "Could not convert '{}' to {}".format(value, dtype.__name__))
    return value


def parse_value(value, dtype=None):
    """
    Parses a value or a list of values, written either in brackets or as a
    comma-separated string
    """
    if isinstance(value, str):
        value = value.strip()
        if value.startswith('[') and value.endswith(']'):
            value = value[1:-1]
        if ',' in value:
            value = [v for v in value.split(',') if v.strip()]
    else:
        # Cast all iterables (except strings) into lists
        try:
            value = list(value)
        except TypeError:
            pass
    if isinstance(value, list):
        value = [parse_single_value(v, dtype=dtype) for v in value]
        # Check to see if datatypes are consistent
        dtypes = set(type(v) for v in value)
        if len(dtypes) > 1:
            raise FracGalUsageError(
                "Inconsistent datatypes in values array ({})"
                .format(value))
    else:
        value = parse_single_value(value, dtype=dtype)
    return value


def parse_list(value, dtype):
    "Like parse_value but always returns a list"
    value = parse_value(value, dtype=dtype)
    if not isinstance(value, list):
        value = [value]
    return value
