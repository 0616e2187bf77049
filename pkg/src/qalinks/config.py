"""Resource caps for the exponential algorithms.

``QAL_MAX_CROSSINGS`` in the environment overrides both caps.
"""

import os

STATESUM_MAX_CROSSINGS = 16
SKEIN_MAX_CROSSINGS = 24


def _env_cap():
    raw = os.environ.get("QAL_MAX_CROSSINGS")
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"QAL_MAX_CROSSINGS must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("QAL_MAX_CROSSINGS must be nonnegative")
    return value


def statesum_cap() -> int:
    env = _env_cap()
    return STATESUM_MAX_CROSSINGS if env is None else env


def skein_cap() -> int:
    env = _env_cap()
    return SKEIN_MAX_CROSSINGS if env is None else env
