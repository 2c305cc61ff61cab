from .base import (
    JSON_ENCODING, parse_single_value, parse_value, parse_list)
