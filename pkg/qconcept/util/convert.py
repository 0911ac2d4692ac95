"""Functions for converting identifiers and vectors to strings."""


def object_name(obj: int | str) -> str:
    """Returns the string identifier of a quantaloid object.

    Notes:
        Integers are written as-is (``-1`` -> ``"-1"``); ``float("inf")`` and the
        strings ``"inf"``/``"∞"`` all map to ``"inf"``.
    """
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    if isinstance(obj, str) and obj.strip() in ("inf", "∞"):
        return "inf"
    return str(obj).strip()


def vector_name(vector: tuple) -> str:
    """Returns a compact name for a vector of element names, e.g. ``(0,h,1)``."""

    return "(" + ",".join(str(x) for x in vector) + ")"
