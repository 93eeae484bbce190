"""
Testes para os endpoints da API.

Testes de integração para verificar o comportamento dos endpoints.
"""

from collections.abc import Iterator
from pathlib import Path
from typing import Any

import pytest
from fastapi import status
from fastapi.testclient import TestClient

from app.api.deps import get_settings_dep
from app.core.config import Settings
from app.main import app


class TestHealthEndpoint:
    """Testes para o endpoint /health."""

    def test_health_returns_200(self, client: TestClient) -> None:
        response = client.get("/health")
        assert response.status_code == status.HTTP_200_OK

    def test_health_response_structure(self, client: TestClient) -> None:
        data = client.get("/health").json()

        assert data["status"] == "healthy"
        assert "version" in data
        assert "model_version" in data
        assert "timestamp" in data
        assert "config_path" in data

    def test_health_gate_counts(self, client: TestClient) -> None:
        gates = client.get("/health").json()["gate_counts"]

        assert gates == {
            "muxes_2to1": 2,
            "not_gates": 1,
            "nor_gates": 1,
            "dual_output_extra_transistors": 4,
        }

    def test_health_area_overhead(self, client: TestClient) -> None:
        area = client.get("/health").json()["area_overhead"]

        assert area["full_parallelism"]["1024"] == pytest.approx(0.029)
        assert area["shared_peripherals"]["256"] == pytest.approx(0.0316)
        assert area["shared_peripheral_mux"] == 4


class TestSimulationsEndpoint:
    """Testes para POST /simulations."""

    def test_sub_success(self, client: TestClient) -> None:
        payload: dict[str, Any] = {"operation": "sub", "a": 5, "b": 3, "word_width": 4}

        response = client.post("/simulations", json=payload)

        assert response.status_code == status.HTTP_200_OK
        data = response.json()
        assert data["result_value"] == 2
        assert data["result_bits"] == "00010"
        assert data["activations"] == 1
        assert len(data["trace"]) == 4
        assert data["warnings"] == []

    def test_cmp_returns_comparison(self, client: TestClient) -> None:
        response = client.post(
            "/simulations", json={"operation": "cmp", "a": -3, "b": 2, "word_width": 4}
        )

        assert response.json()["comparison"] == "less"

    def test_scheme_override(self, client: TestClient) -> None:
        response = client.post(
            "/simulations",
            json={"operation": "add", "a": 1, "b": 2, "word_width": 8, "scheme": "scheme1"},
        )

        data = response.json()
        assert data["scheme"] == "scheme1"
        assert data["report"]["scheme"] == "scheme1"

    def test_operand_out_of_range(self, client: TestClient) -> None:
        response = client.post(
            "/simulations", json={"operation": "add", "a": 8, "b": 0, "word_width": 4}
        )

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
        assert response.json()["code"] == "OPERAND_ERROR"

    def test_invalid_operation(self, client: TestClient) -> None:
        response = client.post("/simulations", json={"operation": "mul", "a": 1, "b": 1})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
        assert isinstance(response.json()["detail"], list)

    def test_unknown_field_rejected(self, client: TestClient) -> None:
        response = client.post(
            "/simulations", json={"operation": "add", "a": 1, "b": 1, "rows": 8}
        )
        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY


class TestVerificationsEndpoint:
    """Testes para POST /verifications."""

    def test_width_two(self, client: TestClient) -> None:
        response = client.post("/verifications", json={"max_width": 2})

        assert response.status_code == status.HTTP_200_OK
        data = response.json()
        assert data["total_cases"] == 60
        assert data["mismatches"] == []

    def test_width_capped(self, client: TestClient) -> None:
        response = client.post("/verifications", json={"max_width": 9})
        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY


class TestReportsEndpoints:
    """Testes para /sweeps e /crossovers."""

    def test_default_sweep(self, client: TestClient) -> None:
        response = client.get("/sweeps")

        assert response.status_code == status.HTTP_200_OK
        data = response.json()
        assert len(data) == 9
        assert {row["scheme"] for row in data} == {"current", "scheme1", "scheme2"}

    def test_filtered_sweep(self, client: TestClient) -> None:
        response = client.get("/sweeps", params={"sizes": [256, 512], "schemes": ["scheme2"]})

        data = response.json()
        assert [(row["rows"], row["scheme"]) for row in data] == [
            (256, "scheme2"),
            (512, "scheme2"),
        ]

    def test_invalid_scheme(self, client: TestClient) -> None:
        response = client.get("/sweeps", params={"schemes": ["optical"]})
        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY

    def test_sweep_size_too_small(self, client: TestClient) -> None:
        response = client.get("/sweeps", params={"sizes": [16]})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
        assert response.json()["code"] == "INVALID_PARAMS"

    def test_crossovers(self, client: TestClient) -> None:
        response = client.get("/crossovers")

        assert response.status_code == status.HTTP_200_OK
        data = response.json()
        assert data["frequency"]["status"] == "found"
        assert data["frequency"]["value"] == pytest.approx(7.53e6, rel=0.05)
        assert data["parallelism"]["status"] == "found"


class TestConfigurationErrors:
    """Configuração do servidor inválida vira 422 CONFIGURATION_ERROR."""

    @pytest.fixture
    def broken_config(self, tmp_path: Path) -> Iterator[None]:
        path = tmp_path / "broken.toml"
        path.write_text("[bias]\nv_gread1 = 1.2\nv_gread2 = 1.0\n", encoding="utf-8")
        settings = Settings(_env_file=None, CONFIG_PATH=path)  # type: ignore[call-arg]
        app.dependency_overrides[get_settings_dep] = lambda: settings
        yield
        app.dependency_overrides.clear()

    @pytest.mark.usefixtures("broken_config")
    def test_bad_config_file(self, client: TestClient) -> None:
        response = client.post("/simulations", json={"operation": "add", "a": 1, "b": 1})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
        assert response.json()["code"] == "CONFIGURATION_ERROR"


class TestRootEndpoint:
    """Testes para o endpoint raiz."""

    def test_root_links(self, client: TestClient) -> None:
        data = client.get("/").json()

        assert data["docs"] == "/docs"
        assert data["scalar"] == "/scalar"
        assert data["openapi"] == "/openapi.json"

    def test_openapi_tags(self, client: TestClient) -> None:
        paths = client.get("/openapi.json").json()["paths"]
        assert {"/health", "/simulations", "/verifications", "/sweeps", "/crossovers"} <= set(
            paths
        )
