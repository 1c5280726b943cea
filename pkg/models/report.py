"""
Reports: the output of every command, in CLI JSON mode and over HTTP.

Every value in ``inputs``, ``outputs`` and ``trace`` is JSON-native (exact
rationals are canonical "p/q" strings), so a report survives
``model_dump_json`` / ``model_validate_json`` unchanged and identical inputs
give byte-identical output.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from core.constants import STATUS_OK, Status


class Report(BaseModel):
    command: str = Field(..., description="Command that produced the report")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Canonicalized problem file")
    outputs: Dict[str, Any] = Field(default_factory=dict, description="Exact results")
    trace: List[Dict[str, Any]] = Field(default_factory=list, description="Descent steps, when any")
    status: Status = Field(STATUS_OK, description="ok, failed or error")
    message: Optional[str] = Field(None, description="Error or verification summary")

    model_config = ConfigDict(frozen=True)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)
