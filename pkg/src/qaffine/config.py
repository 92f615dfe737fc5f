"""Cap profiles and run configuration for the verification suites."""

import json
import os
from dataclasses import dataclass, field, replace

PROFILES = {
    # completes in minutes on a laptop
    "desk": {"rank": 2, "max_delta": 3, "max_height": 8},
    "small": {"rank": 1, "max_delta": 2, "max_height": 6},
    "deep": {"rank": 2, "max_delta": 5, "max_height": 18},
}


@dataclass(frozen=True)
class Config:
    rank: int = 2
    max_delta: int = 3
    max_height: int = 8
    threads: int = 1
    periods: int = 2
    weight: tuple = ()
    lie_type: str = "A"

    def with_overrides(self, **kw):
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw)


def from_profile(name=None):
    if name is None:
        name = os.environ.get("QAFFINE_PROFILE", "desk")
    if name not in PROFILES:
        raise ValueError("unknown profile %r (have %s)" % (name, sorted(PROFILES)))
    return Config(**PROFILES[name])


def from_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    lie_type = data.get("type", "A")
    if lie_type != "A":
        raise ValueError("only type A data are supported")
    cfg = from_profile()
    return cfg.with_overrides(rank=data.get("rank"),
                              max_delta=data.get("max_delta"),
                              lie_type=lie_type)
