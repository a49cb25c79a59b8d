from __future__ import annotations

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from graph_core import INT64_MAX, INT64_MIN


Command = Literal["compute", "oracle", "verify", "gen", "bench"]


class RunConfig(BaseModel):
    """Validated CLI invocation. Built from the argparse namespace before any
    work starts; unknown fields are rejected."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command
    input: Optional[Path] = Field(
        None,
        description="Graph file for compute/oracle/verify; '-' reads stdin.",
    )
    root: int = Field(0, ge=0, description="MST root vertex.")
    dsu: Literal["gt", "ref"] = Field("gt", description="Static-union engine.")
    early_exit: bool = Field(
        False,
        description="Stop scanning once n-1-k replacements are found "
                    "(k = number of bridges).",
    )
    format: Literal["tsv", "json"] = "tsv"
    stats: bool = Field(False, description="Append operation counters.")
    trace: bool = Field(False, description="Write the PathLabel trace to stderr.")
    seed: int = Field(0, ge=0, lt=2 ** 64)
    family: Optional[str] = Field(
        None, description="Generator family; gen defaults to random-connected, bench to path-chords."
    )
    n: Optional[int] = Field(None, ge=1)
    m: Optional[int] = Field(None, ge=0)
    wmin: int = Field(1, ge=INT64_MIN, le=INT64_MAX, description="Smallest generated weight.")
    wmax: int = Field(100, ge=INT64_MIN, le=INT64_MAX, description="Largest generated weight.")
    k_min: int = Field(16, ge=1, le=30, description="Smallest bench size 2^k.")
    k_max: int = Field(21, ge=1, le=30, description="Largest bench size 2^k.")
    density: int = Field(4, ge=1, description="Bench edges per vertex (m = density*n).")
    repeats: int = Field(3, ge=1, description="Best-of-N timing per bench row.")
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"

    @model_validator(mode="after")
    def _check_command_inputs(self) -> "RunConfig":
        if self.command in ("compute", "oracle", "verify") and self.input is None:
            raise ValueError(f"{self.command} needs an input file")
        if self.command == "gen" and self.n is None:
            raise ValueError("gen needs --n")
        if self.wmin > self.wmax:
            raise ValueError(f"--wmin {self.wmin} exceeds --wmax {self.wmax}")
        if self.k_min > self.k_max:
            raise ValueError(f"--k-min {self.k_min} exceeds --k-max {self.k_max}")
        return self


class EdgeModel(BaseModel):
    u: int
    v: int
    w: int


class ReplacementRowModel(BaseModel):
    edge: EdgeModel
    replacement: Optional[EdgeModel] = Field(
        None, description="None means the tree edge is a bridge."
    )
    delta: Optional[int] = None
    weight_after_failure: Optional[int] = Field(
        None, description="MST weight if this edge fails and the replacement takes over."
    )


class VitalModel(BaseModel):
    defined: bool
    edge: Optional[EdgeModel] = None
    delta: Optional[int] = None
    bridge_count: int = 0


class StatsModel(BaseModel):
    finds: int
    links: int
    makesets: int
    loop_iterations: int
    steps: int


class ReportModel(BaseModel):
    """Everything `compute` and `oracle` print, in either format."""

    n: int
    m: int
    mst_weight: int
    rows: List[ReplacementRowModel]
    vital: VitalModel
    stats: Optional[StatsModel] = None


class BenchRowModel(BaseModel):
    n: int
    m: int
    sort_kruskal_s: float
    index_s: float
    scan_s: float
    finds: int
    links: int
    makesets: int
    loop_iterations: int
    steps: int
    finds_bound: int
