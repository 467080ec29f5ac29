from pathlib import Path

import pytest

from rieszkit.config import Budget, RunConfig, active_budget, budget_scope, load_run_config
from rieszkit.exceptions import ConfigurationError


class TestBudget:
    def test_defaults(self):
        budget = Budget()
        assert (budget.degree_cap, budget.bits_cap, budget.term_cap) == (64, 4096, 512)
        assert (budget.piece_cap, budget.dimension_cap, budget.fuel) == (4096, 256, None)

    @pytest.mark.parametrize("field", ["degree_cap", "bits_cap", "term_cap", "fuel"])
    def test_caps_must_be_positive(self, field):
        with pytest.raises(ValueError):
            Budget(**{field: 0})

    def test_frozen(self):
        with pytest.raises(ValueError):
            Budget().degree_cap = 3

    def test_scope_installs_and_restores(self):
        assert active_budget() == Budget()
        with budget_scope(Budget(fuel=7)) as budget:
            assert active_budget() is budget
            with budget_scope(Budget(fuel=8)):
                assert active_budget().fuel == 8
            assert active_budget().fuel == 7
        assert active_budget().fuel is None

    def test_small_budget_fixture(self, small_budget):
        assert active_budget().degree_cap == 2


class TestRunConfig:
    def test_overrides_route_budget_fields(self):
        config = RunConfig().with_overrides(seed=3, fuel=100, degree_cap=8, trials=None)
        assert config.seed == 3
        assert config.trials == 20
        assert config.budget == Budget(fuel=100, degree_cap=8)

    def test_invalid_override(self):
        with pytest.raises(ConfigurationError) as exc_info:
            RunConfig().with_overrides(grid=(0, 4))
        assert exc_info.value.exit_code == 1
        assert exc_info.value.errors

    def test_out_path(self, tmp_path):
        assert RunConfig().with_overrides(out=tmp_path / "r.json").out == tmp_path / "r.json"


class TestLoadRunConfig:
    def test_defaults_without_file(self):
        assert load_run_config() == RunConfig()

    def test_section(self, tmp_path):
        path = tmp_path / "run.toml"
        path.write_text(
            '[rieszkit]\nseed = 11\ngrid = [8, 4]\nmodels = ["vector"]\n\n'
            "[rieszkit.budget]\nterm_cap = 32\n"
        )
        config = load_run_config(path)
        assert config.seed == 11
        assert config.grid == (8, 4)
        assert config.models == ("vector",)
        assert config.budget.term_cap == 32

    def test_bare_table(self, tmp_path):
        path = tmp_path / "run.toml"
        path.write_text("trials = 5\n")
        assert load_run_config(path).trials == 5

    @pytest.mark.parametrize("text", ["seed = [\n", 'models = ["matrix"]\n', "trials = -1\n"])
    def test_rejects(self, tmp_path, text):
        path = tmp_path / "run.toml"
        path.write_text(text)
        with pytest.raises(ConfigurationError):
            load_run_config(path)

    def test_missing_file(self):
        with pytest.raises(ConfigurationError) as exc_info:
            load_run_config(Path("/nonexistent/run.toml"))
        assert exc_info.value.resource == "/nonexistent/run.toml"
