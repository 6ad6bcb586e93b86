from src.core.config import Settings, settings


class TestSettings:
    def test_defaults(self):
        assert settings.DEFAULT_WINDOW == 20
        assert settings.HALO_FACTOR == 3
        assert settings.ASSOCIATIVITY_WINDOW == 6
        assert settings.CONVEXITY_GRID_POINTS == 512
        assert settings.CONVEXITY_H_SCALES == 8
        assert settings.VANISH_EPSILON == 1e-6
        assert settings.DIVERGENCE_SCHEDULE == [100, 1_000, 10_000, 100_000]

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("DEFAULT_WINDOW", "7")
        monkeypatch.setenv("ENVIRONMENT", "prod")
        fresh = Settings()
        assert fresh.DEFAULT_WINDOW == 7
        assert fresh.ENVIRONMENT == "prod"

    def test_case_sensitive(self, monkeypatch):
        monkeypatch.setenv("default_window", "9")
        assert Settings().DEFAULT_WINDOW == 20
