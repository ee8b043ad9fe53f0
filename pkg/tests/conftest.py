from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from distinguon.config import Settings, configure
from distinguon.interferometer import balanced_beamsplitter, haar_random_unitary
from distinguon.permanent import permanent_bruteforce


DATA_DIR = Path(__file__).resolve().parent.parent / "Data"


@pytest.fixture(autouse=True)
def _fresh_settings():
	previous = configure(None)
	yield
	configure(previous)


@pytest.fixture
def settings() -> Settings:
	return Settings()


@pytest.fixture
def beamsplitter() -> np.ndarray:
	return balanced_beamsplitter()


@pytest.fixture
def haar():
	def make(m: int, seed: int = 7) -> np.ndarray:
		return haar_random_unitary(m, seed)

	return make


@pytest.fixture
def brute_permanent():
	return permanent_bruteforce


@pytest.fixture
def data_dir() -> Path:
	return DATA_DIR
