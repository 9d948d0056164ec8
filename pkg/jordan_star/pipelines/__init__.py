from jordan_star.pipelines.verify_pipeline import SUITES, Artifacts, run_pipeline, theorem_suite

__all__ = ["SUITES", "Artifacts", "run_pipeline", "theorem_suite"]
