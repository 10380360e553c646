"""Command line driver for the whole pipeline.

Verbs: ingest, fit, analyze, summarize, export, run-app.
Exit codes: 0 success, 1 usage error, 2 runtime failure.
Progress is emitted as JSON lines on stderr.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from ..errors import DocTopicsError
from .bundle import load_bundle
from .config import AppConfig, PipelineConfig
from . import pipeline


def _log(event: dict) -> None:
    sys.stderr.write(json.dumps(event, sort_keys=True) + "\n")
    sys.stderr.flush()


@click.group(name="doctopics")
def cli():
    """Comparative document analytics: fit, analyze, summarize, serve."""


@cli.command()
@click.option("--manifest", "manifest_path", required=True, type=click.Path(), help="corpus manifest JSON")
@click.option("--out", "out_dir", required=True, type=click.Path(), help="work directory")
@click.option("--force", is_flag=True, help="rebuild even if the corpus exists")
def ingest(manifest_path, out_dir, force):
    """Build the token corpus from extracted text plus the manifest."""
    pipeline.stage_ingest(manifest_path, out_dir, force=force, log=_log)


@cli.command()
@click.option("--corpus", "work_dir", required=True, type=click.Path(), help="work directory from ingest")
@click.option("--sections", default="all", show_default=True, help="comma-separated section ids or 'all'")
@click.option("--config", "config_path", type=click.Path(), help="pipeline config JSON")
@click.option("--force", is_flag=True)
def fit(work_dir, sections, config_path, force):
    """Fit the optimal topic model per section over the configured grid."""
    config = PipelineConfig.load(config_path) if config_path else PipelineConfig.defaults()
    pipeline.stage_fit(work_dir, sections=sections, config=config, force=force, log=_log)


@cli.command()
@click.option("--models", "work_dir", required=True, type=click.Path(), help="work directory holding models/")
@click.option("--config", "config_path", type=click.Path(), help="pipeline config JSON (defaults to the one stored at fit time)")
@click.option("--force", is_flag=True)
def analyze(work_dir, config_path, force):
    """Distances, clusterings, MANOVA, 2D mappings, term rankings, correlations."""
    config = PipelineConfig.load(config_path) if config_path else None
    pipeline.stage_analyze(work_dir, config=config, force=force, log=_log)


@cli.command()
@click.option("--corpus", "work_dir", required=True, type=click.Path(), help="work directory from ingest")
@click.option("--stub", is_flag=True, help="use the offline stub LLM client")
@click.option("--config", "config_path", type=click.Path())
@click.option("--force", is_flag=True)
def summarize(work_dir, stub, config_path, force):
    """Hybrid extractive+abstractive summaries per document section."""
    config = PipelineConfig.load(config_path) if config_path else None
    pipeline.stage_summarize(work_dir, stub=stub, config=config, force=force, log=_log)


@cli.command()
@click.option("--out", "out_path", required=True, type=click.Path(), help="bundle directory to write")
@click.option("--work", "work_dir", default=".", show_default=True, type=click.Path())
@click.option("--timestamp", default=None, help="explicit creation timestamp (RFC 3339)")
@click.option("--force", is_flag=True)
def export(out_path, work_dir, timestamp, force):
    """Assemble the versioned analysis bundle for the exploration app."""
    pipeline.stage_export(work_dir, out_path, force=force, log=_log, timestamp=timestamp)


@cli.command(name="run-app")
@click.option("--config", "config_path", required=True, type=click.Path(), help="app config JSON")
def run_app(config_path):
    """Serve the bundle API (and the UI, when built) over HTTP."""
    import uvicorn

    from .api import create_app

    config = AppConfig.load(config_path)
    bundle = load_bundle(config.bundle)
    app = create_app(bundle, config)
    _log({"stage": "run-app", "event": "serving", "host": config.host, "port": config.port})
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        sys.stderr.write(f"usage error: {exc.format_message()}\n")
        if exc.ctx is not None:
            sys.stderr.write(exc.ctx.get_usage() + "\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1
    except click.Abort:
        return 1
    except (DocTopicsError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
