# Models package
from models.schemas import (
    BenchRowModel,
    EdgeModel,
    ReplacementRowModel,
    ReportModel,
    RunConfig,
    StatsModel,
    VitalModel,
)

__all__ = [
    "BenchRowModel",
    "EdgeModel",
    "ReplacementRowModel",
    "ReportModel",
    "RunConfig",
    "StatsModel",
    "VitalModel",
]
