import math


def format_number(value: float) -> str:
    """Shortest round-trip decimal form, integral values without `.0`."""
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"Cannot format non-finite value {value!r}.")
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)
