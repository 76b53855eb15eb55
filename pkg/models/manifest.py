import os
from dataclasses import asdict, dataclass, field
from datetime import UTC, datetime

from services.const import APP_VERSION


def _timestamp() -> str:
    # SOURCE_DATE_EPOCH pins the clock for byte-identical output.
    epoch = os.getenv("SOURCE_DATE_EPOCH")
    moment = (
        datetime.fromtimestamp(int(epoch), tz=UTC)
        if epoch
        else datetime.now(UTC)
    )
    return moment.isoformat(timespec="seconds")


@dataclass(frozen=True)
class RunManifest:
    """Describes how an output file was produced."""

    command: str
    config: dict
    version: str = APP_VERSION
    timestamp: str = field(default_factory=_timestamp)

    def to_dict(self) -> dict:
        return asdict(self)
