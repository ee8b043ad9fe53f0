from __future__ import annotations

from ..errors import ValidationError
from .base import DistributionModel


_REGISTRY: dict[str, DistributionModel] = {}


def register_model(model: DistributionModel) -> None:
	_REGISTRY[str(getattr(model, "model_id", ""))] = model


def get_model(model_id: str) -> DistributionModel:
	mid = str(model_id or "").strip()
	if mid in _REGISTRY:
		return _REGISTRY[mid]
	raise ValidationError(f"unknown model {mid!r}; available: {', '.join(available_models())}")


def available_models() -> list[str]:
	return sorted(_REGISTRY)
