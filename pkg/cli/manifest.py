import os
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from config import DEFAULT_SEED_ENV, TOOL_VERSION
from utils import read_json, write_json


MANIFEST_SUFFIX = ".manifest.json"


@dataclass
class RunManifest:
    """Everything needed to repeat a run: argv is replayed verbatim by `rerun`."""

    subcommand: str
    argv: List[str]
    flags: Dict[str, Any]
    seed: int
    seed_env: Optional[str] = None
    tool_version: str = TOOL_VERSION
    outputs: List[str] = field(default_factory=list)
    duration_seconds: float = 0.0

    def __post_init__(self):
        if self.seed_env is None:
            self.seed_env = os.environ.get(DEFAULT_SEED_ENV)

    @staticmethod
    def path_for(output: str) -> str:
        return output + MANIFEST_SUFFIX

    def write(self) -> List[str]:
        """One manifest beside every output file."""
        return [write_json(self.path_for(output), asdict(self)) for output in self.outputs]

    @classmethod
    def load(cls, path: str) -> "RunManifest":
        return cls(**read_json(path))
