"""
Created on Oct 19 2026
"""

from math import pi


def parse_angle(value: str) -> float:
    """Parse an angle given in radians. A trailing 'pi'
    multiplies the number by pi, so that '0.25pi', '0.25*pi'
    and 'pi' are all accepted.

    :param value: the string to parse
    :type value: str
    :rtype: float
    :raises ValueError: if value is not a number of radians
    """
    s = value.strip().lower()
    try:
        if s.endswith('pi'):
            head = s[:-2].rstrip('*')
            return (float(head) if head else 1.0) * pi
        return float(s)
    except ValueError:
        raise ValueError(f'invalid angle: {value!r}')
