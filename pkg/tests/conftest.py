from __future__ import annotations

import pytest

from gesturec.pipeline import PipelineConfig, Resources, load_resources


@pytest.fixture(scope="session")
def resources() -> Resources:
    return load_resources(PipelineConfig())


@pytest.fixture()
def config() -> PipelineConfig:
    return PipelineConfig()
