from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from qmds.config import QmdsSettings

ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG_PATH = ROOT / "configs" / "default.yaml"


def load_settings(path: Optional[str] = None) -> QmdsSettings:
    cfg_path = Path(path) if path else DEFAULT_CONFIG_PATH
    if not cfg_path.exists():
        return QmdsSettings()
    with cfg_path.open("r") as fh:
        data: Dict[str, Any] = yaml.safe_load(fh) or {}
    return QmdsSettings.from_dict(data)
