"""Exact rational coercion shared by every input surface (JSON, CLI, constructors)."""

from fractions import Fraction


def rat(value) -> Fraction:
    """Coerce ``value`` to an exact :class:`Fraction`.

    Accepts ints, Fractions, and strings in integer, decimal, or ``p/q``
    form.  Floats are rejected on purpose: a binary float would silently
    corrupt the exact order and equality comparisons everything here
    relies on.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"exact rational required, got bool: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"exact rational required, got {type(value).__name__}: {value!r}")


def rat_str(value: Fraction) -> str:
    """Format exactly; inverse of :func:`rat` up to value equality."""
    return str(value)
