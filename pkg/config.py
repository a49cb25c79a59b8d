"""Environment-driven defaults for repledge.

Values come from the process environment, optionally seeded from a `.env`
file in the working directory. Every variable has a sane default and a
malformed value falls back to it rather than failing at import.

  REPLEDGE_DSU             default static-union engine ("gt" or "ref").
  REPLEDGE_LOG_LEVEL       root log level for the CLI. Default WARNING.
  REPLEDGE_MICROSET_BITS   microset size bound b for the gt engine.
                           Default 16 (half a 64-bit word, which also keeps
                           the 2^b answer table at 64K entries). Clamped to
                           [1, 16].
  REPLEDGE_BENCH_REPEATS   best-of-N repeats per bench row. Default 3.
  REPLEDGE_WMAX            default upper weight bound for `gen`. Default 100.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from dotenv import load_dotenv


load_dotenv()

MAX_MICROSET_BITS = 16


def _int_env(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, str(default)))
    except ValueError:
        return default


def clamp_microset_bits(bits: int) -> int:
    return max(1, min(MAX_MICROSET_BITS, bits))


@dataclass(frozen=True)
class Settings:
    dsu: str
    log_level: str
    microset_bits: int
    bench_repeats: int
    wmax: int


def load_settings() -> Settings:
    return Settings(
        dsu=os.environ.get("REPLEDGE_DSU", "gt") or "gt",
        log_level=(os.environ.get("REPLEDGE_LOG_LEVEL", "WARNING") or "WARNING").upper(),
        microset_bits=clamp_microset_bits(_int_env("REPLEDGE_MICROSET_BITS", MAX_MICROSET_BITS)),
        bench_repeats=max(1, _int_env("REPLEDGE_BENCH_REPEATS", 3)),
        wmax=_int_env("REPLEDGE_WMAX", 100),
    )


settings = load_settings()
