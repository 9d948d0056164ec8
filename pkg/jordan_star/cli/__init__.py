from jordan_star.cli.main import ConfigurationError, RunConfig, main, remark_substitution, run

__all__ = ["ConfigurationError", "RunConfig", "main", "remark_substitution", "run"]
