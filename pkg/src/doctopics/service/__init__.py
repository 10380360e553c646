from .bundle import AnalysisBundle, load_bundle, save_bundle
from .config import AppConfig, PipelineConfig

__all__ = ["AnalysisBundle", "load_bundle", "save_bundle", "AppConfig", "PipelineConfig"]
